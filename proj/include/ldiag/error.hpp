#ifndef LDIAG_ERROR_HPP
#define LDIAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ldiag {

enum class Errc {
    unpacked,
    ragged,
    index_out_of_range,
    bound_exceeded,
    invalid_placement,
    unverified_structure,
    parse_error,
    overflow,
};

inline const char* to_string(Errc e) noexcept {
    switch (e) {
    case Errc::unpacked: return "reject-unpacked";
    case Errc::ragged: return "reject-ragged";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::bound_exceeded: return "bound-exceeded";
    case Errc::invalid_placement: return "invalid-placement";
    case Errc::unverified_structure: return "unverified-structure";
    case Errc::parse_error: return "parse-error";
    case Errc::overflow: return "overflow";
    }
    return "unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace ldiag

#endif
