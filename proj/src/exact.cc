#include <gridram/error.hh>
#include <gridram/exact.hh>

#include <cmath>
#include <sstream>

using std::optional;
using std::string;

namespace gridram
{
    namespace
    {
        auto pow2(unsigned e) -> BigInt
        {
            BigInt v = 1;
            v <<= e;
            return v;
        }

        auto log2_of(const BigInt & v) -> double
        {
            if (v <= 0)
                return -INFINITY;
            auto bits = msb(v);
            if (bits < 60)
                return std::log2(v.convert_to<double>());
            BigInt top = v >> (bits - 52);
            return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
        }

        auto check_lines(int r, int c) -> void
        {
            if (r < 1 || c < 1)
                throw InvalidArgument("r and c must be positive");
            if (r + c > 16)
                throw InvalidArgument("r + c above 16 gives numbers with more than 2^16 bits; refusing");
        }
    }

    auto PowerBound::to_string() const -> string
    {
        std::ostringstream out;
        if (value)
            out << *value;
        else
            out << coefficient << " * k^(" << gridram::to_string(k_exponent) << ")";
        return out.str();
    }

    auto to_string(const Rational & q) -> string
    {
        std::ostringstream out;
        out << numerator(q);
        if (denominator(q) != 1)
            out << "/" << denominator(q);
        return out.str();
    }

    auto exact_sqrt(const BigInt & n) -> optional<BigInt>
    {
        if (n < 0)
            return std::nullopt;
        BigInt root = boost::multiprecision::sqrt(n);
        if (root * root == n)
            return root;
        return std::nullopt;
    }

    auto binomial(const BigInt & n, unsigned k) -> BigInt
    {
        if (k > n)
            return 0;
        BigInt result = 1;
        for (unsigned i = 0; i < k; ++i)
            result = result * (n - i) / (i + 1);
        return result;
    }

    auto threshold_bound(int r, int c, const BigInt & k) -> PowerBound
    {
        check_lines(r, c);
        if (k < 1)
            throw InvalidArgument("k must be positive");
        int s = r + c;
        PowerBound b;
        b.coefficient = pow2((1u << s) - 2);
        // 2^(s - 3) with s = 2 is one half
        if (s >= 3)
            b.k_exponent = Rational(BigInt(1) << (s - 3));
        else
            b.k_exponent = Rational(1, 2);

        if (denominator(b.k_exponent) == 1) {
            BigInt kp = pow(k, numerator(b.k_exponent).convert_to<unsigned>());
            b.value = b.coefficient * kp;
        }
        else if (auto root = exact_sqrt(k))
            b.value = b.coefficient * *root;

        b.log2_value = static_cast<double>((1u << s) - 2) + b.k_exponent.convert_to<double>() * log2_of(k);
        return b;
    }

    auto embedding_count_bound(int r, int c, const BigInt & n, const BigInt & k) -> Rational
    {
        check_lines(r, c);
        if (k < 1 || n < 0)
            throw InvalidArgument("need k >= 1 and N >= 0");
        int s = r + c;
        // k exponent 1 - 2^(s - 2) is <= 0 for s >= 2
        unsigned k_power = (1u << (s - 2)) - 1;
        BigInt num = pow(n, static_cast<unsigned>(s));
        BigInt den = pow2((1u << s) + 2) * pow(k, k_power);
        return Rational(num, den);
    }

    auto turan_f(const BigInt & x, const BigInt & k) -> Rational
    {
        if (k < 2)
            throw InvalidArgument("turan_f needs k >= 2");
        return Rational(x * (x - k + 1), 2 * (k - 1));
    }
}
