#ifndef SECST_VERSION_HPP
#define SECST_VERSION_HPP

namespace secst {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
