#include "parthom/filter_spec.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "parthom/frobenius.hpp"

namespace parthom {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    CompositionComplex run() {
        CompositionComplex delta = parse_body();
        std::optional<int> suffix = parse_n_suffix();
        if (!at_end()) fail("trailing characters");
        if (suffix && *suffix != delta.n())
            fail("@" + std::to_string(*suffix) + " contradicts implied n = " +
                 std::to_string(delta.n()));
        return delta;
    }

  private:
    CompositionComplex parse_body() {
        if (eat("gen:")) return parse_gen();
        if (eat("simplex:")) {
            Composition c = parse_composition();
            return filter_from_generators(c.n(), {c});
        }
        if (eat("boundary:")) {
            Composition c = parse_composition();
            return boundary_of_simplex(c);
        }
        if (eat("skeleton:")) {
            int k = parse_int("skeleton dimension");
            expect(':');
            Composition c = parse_composition();
            return skeleton(filter_from_generators(c.n(), {c}), k);
        }
        if (eat("semigroup:")) {
            std::vector<int> gens = parse_int_list("generator");
            int n = require_n_suffix();
            return frobenius_filter(Semigroup(gens, n), n);
        }
        if (eat("ddiv:")) {
            int d = parse_int("divisor");
            int n = require_n_suffix();
            if (d < 1 || n % d != 0) fail("ddiv requires d >= 1 dividing n");
            return frobenius_filter(Semigroup({d}, n), n);
        }
        if (eat("knapsack:")) {
            expect('{');
            std::vector<int> lambda = parse_int_list("lambda part");
            expect('}');
            expect('|');
            int m = parse_int("last part m");
            return knapsack_complex(lambda, m);
        }
        if (eat("full")) {
            int n = require_n_suffix();
            return full_complex(n);
        }
        fail("expected one of gen:, simplex:, boundary:, skeleton:, semigroup:, ddiv:, knapsack:, full");
    }

    CompositionComplex parse_gen() {
        std::vector<Composition> gens;
        gens.push_back(parse_composition());
        while (peek() == ',' && peek(1) == '[') {
            ++pos_;  // the comma
            gens.push_back(parse_composition());
        }
        return filter_from_generators(gens.front().n(), gens);
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    Composition parse_composition() {
        expect('[');
        std::vector<int> parts = parse_int_list("part");
        expect(']');
        const std::size_t at = pos_;
        try {
            return Composition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), at);
        }
    }

    std::vector<int> parse_int_list(const char* what) {
        std::vector<int> values;
        values.push_back(parse_int(what));
        while (eat(",")) values.push_back(parse_int(what));
        return values;
    }

    int parse_int(const char* what) {
        std::size_t start = pos_;
        bool negative = eat("-");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start + (negative ? 1 : 0))
            fail(std::string("expected ") + what);
        return std::stoi(text_.substr(start, pos_ - start));
    }

    std::optional<int> parse_n_suffix() {
        if (!eat("@")) return std::nullopt;
        return parse_int("n");
    }

    int require_n_suffix() {
        if (!eat("@")) fail("expected @n suffix");
        return parse_int("n");
    }

    bool eat(const std::string& prefix) {
        if (text_.compare(pos_, prefix.size(), prefix) == 0) {
            pos_ += prefix.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool at_end() const { return pos_ == text_.size(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

CompositionComplex parse_spec(const std::string& text) {
    Parser parser(text);
    try {
        return parser.run();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string spec_of_facets(const CompositionComplex& delta) {
    std::ostringstream os;
    os << "gen:";
    bool first = true;
    for (FaceMask f : delta.facets()) {
        if (!first) os << ',';
        first = false;
        os << Composition::decode(delta.n(), f).to_string();
    }
    os << '@' << delta.n();
    return os.str();
}

}  // namespace parthom
