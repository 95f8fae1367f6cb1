#pragma once

#include <stdexcept>
#include <string>

namespace mdlcause {

// Failure classes surfaced by the library. The CLI maps each class to a
// distinct exit status so scripted harnesses can tell I/O, parse, and
// degenerate-data failures apart.
enum class errc {
    invalid_parameter,
    contract_violation,
    degenerate_column,
    paired_data,
    encoding,
    parse,
    io,
    fetch,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

    // Exit-status contract: 0 success, 2 I/O (incl. fetch), 3 parse/encoding,
    // 4 degenerate data, 1 everything else.
    int exit_code() const noexcept {
        switch (code_) {
            case errc::io:
            case errc::fetch:
                return 2;
            case errc::parse:
            case errc::encoding:
                return 3;
            case errc::degenerate_column:
            case errc::paired_data:
                return 4;
            default:
                return 1;
        }
    }

private:
    errc code_;
};

}  // namespace mdlcause
