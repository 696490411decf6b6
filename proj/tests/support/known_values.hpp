#ifndef GRASSGB_TESTS_KNOWN_VALUES_HPP
#define GRASSGB_TESTS_KNOWN_VALUES_HPP

// Hand-transcribed reference data: small generators and the full additive
// bases for t = 3 and t = 4, listed by increasing degree.

#include <string>
#include <utility>
#include <vector>

namespace known {

// g_1, ..., g_9.
inline const std::vector<std::pair<unsigned, std::string>> kSmallG{
    {1, "0"},        {2, "w2"},        {3, "w3"},
    {4, "w2^2"},     {5, "0"},         {6, "w2^3 + w3^2"},
    {7, "w2^2*w3"},  {8, "w2^4 + w2*w3^2"}, {9, "w3^3"},
};

inline const std::vector<std::string> kBasisT3{
    "1", "w2", "w3", "w2^2", "w2*w3", "w3^2", "a", "w2*w3^2", "a*w2", "a*w3", "a*w2^2",
    "a*w2*w3", "a*w3^2", "a*w2*w3^2",
};

inline const std::vector<std::string> kBasisT4{
    "1", "w2", "w3", "w2^2", "w2*w3", "w2^3", "w3^2", "w2^2*w3", "w2^4", "w2*w3^2", "w2^3*w3",
    "w3^3", "w2^5", "w2^2*w3^2", "w2^4*w3", "w2*w3^3", "w2^6", "w2^3*w3^2", "w3^4", "w2^5*w3",
    "w2^2*w3^3", "w2^4*w3^2", "w2*w3^4", "a", "w2^3*w3^3", "w3^5", "w2^5*w3^2", "w2^2*w3^4",
    "a*w2", "w2*w3^5", "a*w3", "w2^3*w3^4", "w3^6", "a*w2^2", "w2^2*w3^5", "a*w2*w3", "w2*w3^6",
    "a*w2^3", "a*w3^2", "w2^3*w3^5", "a*w2^2*w3", "w2^2*w3^6", "a*w2^4", "a*w2*w3^2",
    "a*w2^3*w3", "a*w3^3", "w2^3*w3^6", "a*w2^5", "a*w2^2*w3^2", "a*w2^4*w3", "a*w2*w3^3",
    "a*w2^6", "a*w2^3*w3^2", "a*w3^4", "a*w2^5*w3", "a*w2^2*w3^3", "a*w2^4*w3^2", "a*w2*w3^4",
    "a*w2^3*w3^3", "a*w3^5", "a*w2^5*w3^2", "a*w2^2*w3^4", "a*w2*w3^5", "a*w2^3*w3^4", "a*w3^6",
    "a*w2^2*w3^5", "a*w2*w3^6", "a*w2^3*w3^5", "a*w2^2*w3^6", "a*w2^3*w3^6",
};

}  // namespace known

#endif  // GRASSGB_TESTS_KNOWN_VALUES_HPP
