#include "cbc/params.hpp"

namespace cbc {

std::string CodeParams::to_string() const {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", m=" + std::to_string(m) +
           ", r=" + std::to_string(r) + ")";
}

void validate_params(const CodeParams& p) {
    using V = ParameterError::Violation;
    if (p.n < 1 || p.k < 1 || p.m < 1 || p.r < 0)
        throw ParameterError(V::OutOfRange, "parameters " + p.to_string() + " need n, k, m >= 1 and r >= 0");
    if (p.r >= p.m)
        throw ParameterError(V::RedundancyTooLarge, "r >= m in " + p.to_string() + ": every server may be down");
    if (p.k > p.n) throw ParameterError(V::BatchExceedsFiles, "k > n in " + p.to_string());
    if (p.k > p.m - p.r)
        throw ParameterError(V::BatchExceedsServers, "k > m - r in " + p.to_string() + ": too few servers remain");
}

bool params_valid(const CodeParams& p) noexcept {
    return p.n >= 1 && p.k >= 1 && p.m >= 1 && p.r >= 0 && p.r < p.m && p.k <= p.n && p.k <= p.m - p.r;
}

}  // namespace cbc
