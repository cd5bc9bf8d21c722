#ifndef QTC_ANALYZE_HPP
#define QTC_ANALYZE_HPP

#include <functional>
#include <map>
#include <optional>

#include "qtc/twistulant.hpp"

namespace qtc {

/// Default cap on exhaustive enumerations: number of codewords q^k.
inline constexpr unsigned long long kEnumerationCap = 10'000'000;

/// A linear code given by a (possibly redundant) generator matrix.
/// The reduced generator is the RREF with k = rank independent rows.
struct LinearCode {
    Field field;
    Matrix generator;
    unsigned n;
    unsigned k;
    Echelon reduced;
};

LinearCode make_linear_code(Matrix generator);

struct WeightDistribution {
    std::map<unsigned, unsigned long long> counts;  // weight -> #codewords
    unsigned long long total;                       // q^k
};

/// Calls f with every codeword, the zero word included (q^k calls).
/// Throws TooLarge when q^k exceeds the cap.
void for_each_codeword(const LinearCode& c,
                       const std::function<void(const std::vector<unsigned>&)>& f,
                       unsigned long long cap = kEnumerationCap);

WeightDistribution weight_distribution(const LinearCode& c,
                                       unsigned long long cap = kEnumerationCap);

/// Minimum nonzero weight, by direct enumeration (independent of
/// weight_distribution). Throws ZeroDimensional, TooLarge.
unsigned min_distance(const LinearCode& c, unsigned long long cap = kEnumerationCap);

/// The two nonzero weights in ascending order, or nullopt if the code is
/// not two-weight.
std::optional<std::pair<unsigned, unsigned>> is_two_weight(const LinearCode& c,
                                                           unsigned long long cap = kEnumerationCap);

/// The single nonzero weight, or nullopt.
std::optional<unsigned> is_equidistant(const LinearCode& c,
                                       unsigned long long cap = kEnumerationCap);

/// True iff no generator column is zero and no two columns are scalar
/// multiples of each other (dual distance >= 3).
bool is_projective(const LinearCode& c);

/// Quasi-twisted closure. Interleaved form: the lambda-consta-cyclic
/// shift by P positions maps every codeword into the code. Block form:
/// the simultaneous single lambda-shift of each of the P length-(n/P)
/// blocks does. Throws BadGeometry when n is not divisible by P.
bool qt_closure(const LinearCode& c, unsigned P, unsigned lambda, bool interleaved,
                unsigned long long cap = kEnumerationCap);

}  // namespace qtc

#endif
