#pragma once

namespace mlaf::fault {

/// Deliberate defects used to check that the verification suite notices
/// them. Never enabled in normal runs.
struct Flags {
    bool skip_dealias = false;
    bool skip_projection = false;
};

Flags& flags();

/// Restores the previous flags on scope exit.
class ScopedFault {
public:
    explicit ScopedFault(Flags f) : saved_(flags()) { flags() = f; }
    ~ScopedFault() { flags() = saved_; }
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

private:
    Flags saved_;
};

} // namespace mlaf::fault
