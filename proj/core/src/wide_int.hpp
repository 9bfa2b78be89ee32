#pragma once

namespace cupcap::detail {

__extension__ typedef __int128 i128;

inline int sign_of(i128 v) { return (v > 0) - (v < 0); }

}  // namespace cupcap::detail
