#ifndef TPC_ERRORS_HPP
#define TPC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpc {

// Invalid input: bad bounds, malformed config, out-of-range parameters.
// `path` names the offending field (e.g. "radio.deltaP") when known.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message, std::string path = {})
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// A computation refused because it would exceed a configured size cap.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& message, std::size_t required)
        : std::runtime_error(message), required_(required) {}

    std::size_t required() const noexcept { return required_; }

private:
    std::size_t required_;
};

} // namespace tpc

#endif // TPC_ERRORS_HPP
