#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "parthom/complexes.hpp"

namespace parthom {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Filter-spec grammar, shared by the CLI and the JSON reports:
//   gen:[2,2],[3,1]      filter generated by the listed compositions
//   simplex:[d,...]      simplex generated by one composition
//   boundary:[c]         boundary of the simplex generated by c
//   skeleton:k:[c]       k-skeleton of the simplex generated by c
//   semigroup:a,b,...@n  Frobenius complex of <a,b,...> at n
//   ddiv:d@n             d-divisible filter (parts divisible by d)
//   knapsack:{1,2,2}|m   knapsack complex of lambda with last part m
//   full@n               all compositions of n
// The @n suffix is mandatory where n is not implied by the body and is
// validated against the implied value elsewhere.
CompositionComplex parse_spec(const std::string& text);

// A canonical gen:[...]@n spec naming the complex by its facets; parsing it
// back reproduces the complex.
std::string spec_of_facets(const CompositionComplex& delta);

}  // namespace parthom
