#ifndef GRIDRAM_EXACT_HH
#define GRIDRAM_EXACT_HH

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gridram
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// coefficient * k^exponent, kept symbolic because the exponent of k
    /// may be fractional.
    struct PowerBound
    {
        BigInt coefficient;
        Rational k_exponent;
        /// Exact value when it is an integer.
        std::optional<BigInt> value;
        double log2_value = 0.0;

        [[nodiscard]] auto to_string() const -> std::string;
    };

    /// 2^(2^(r+c) - 2) * k^(2^(r+c-3)). Throws InvalidArgument unless
    /// r, c >= 1, k >= 1 and r + c <= 16.
    auto threshold_bound(int r, int c, const BigInt & k) -> PowerBound;

    /// 2^(-2^(r+c) - 2) * N^(r+c) * k^(1 - 2^(r+c-2)), exactly.
    auto embedding_count_bound(int r, int c, const BigInt & n, const BigInt & k) -> Rational;

    /// x (x - k + 1) / (2 (k - 1)); throws InvalidArgument for k < 2.
    auto turan_f(const BigInt & x, const BigInt & k) -> Rational;

    auto to_string(const Rational &) -> std::string;

    /// Integer square root if n is a perfect square.
    auto exact_sqrt(const BigInt & n) -> std::optional<BigInt>;

    auto binomial(const BigInt & n, unsigned k) -> BigInt;
}

#endif
