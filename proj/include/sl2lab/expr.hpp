#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl2lab/scalar.hpp"

namespace sl2lab {

/// Generators of sl2(C). A is an input alias for h, resolved at lowering;
/// it never appears in a stored word.
enum class Gen : uint8_t { X, Y, H, B, C };

char gen_char(Gen g);
std::optional<Gen> gen_from_char(char c);  // accepts 'A' as H

struct ExprTerm {
    GaussianRational coeff;
    std::vector<Gen> word;  // empty word = algebra unit

    friend bool operator==(const ExprTerm& a, const ExprTerm& b) {
        return a.coeff == b.coeff && a.word == b.word;
    }
};

/// Finite sum of scalar-weighted words in the generators: an arbitrary
/// element of U(sl2(C)) before reduction.
struct ExprSum {
    std::vector<ExprTerm> terms;

    static ExprSum scalar(GaussianRational c);
    static ExprSum generator(Gen g);
    static ExprSum word(std::vector<Gen> w, GaussianRational c = GaussianRational(1));

    ExprSum& operator+=(const ExprSum& o);
    friend ExprSum operator+(ExprSum a, const ExprSum& b) { return a += b; }
    friend ExprSum operator-(ExprSum a, const ExprSum& b);
    friend ExprSum operator*(const ExprSum& a, const ExprSum& b);  // concatenation, bilinear
    friend ExprSum operator*(const GaussianRational& s, const ExprSum& e);

    // Merge identical words, drop zero terms.
    ExprSum collected() const;
};

}  // namespace sl2lab
