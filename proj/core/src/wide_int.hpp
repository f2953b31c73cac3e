#pragma once

namespace cuspsum::detail {
// 128-bit products for exact cross-multiplication and residues.
__extension__ typedef __int128 wide_int;
}  // namespace cuspsum::detail
