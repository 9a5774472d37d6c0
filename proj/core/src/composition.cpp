#include "parthom/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parthom {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Composition: no parts");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Composition: part < 1");
        n_ += p;
    }
    if (n_ > kMaxCompositionSize)
        throw std::invalid_argument("Composition: n exceeds word-size limit 63");
}

Composition Composition::decode(int n, FaceMask cuts) {
    if ((cuts & ~full_mask(n)) != 0)
        throw std::invalid_argument("Composition::decode: cut outside {1..n-1}");
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i < n; ++i)
        if (cuts & (FaceMask{1} << (i - 1))) {
            parts.push_back(i - prev);
            prev = i;
        }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

FaceMask Composition::encode() const {
    FaceMask m = 0;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        m |= FaceMask{1} << (acc - 1);
    }
    return m;
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Composition Composition::parse(const std::string& text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("Composition::parse: expected [a,b,...]");
    std::vector<int> parts;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("Composition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Composition complement(const Composition& c) {
    return Composition::decode(c.n(), full_mask(c.n()) & ~c.encode());
}

bool drop_one(const Composition& c, Composition& out) {
    if (c.last() < 2) return false;
    std::vector<int> parts = c.parts();
    parts.back() -= 1;
    out = Composition(std::move(parts));
    return true;
}

std::vector<int> slash_one(const Composition& c) {
    std::vector<int> parts = c.parts();
    if (parts.back() >= 2)
        parts.back() -= 1;
    else
        parts.pop_back();
    return parts;
}

Composition descent_composition(const Permutation& alpha) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i < alpha.n(); ++i)
        if (alpha(i) > alpha(i + 1)) {
            parts.push_back(i - prev);
            prev = i;
        }
    parts.push_back(alpha.n() - prev);
    return Composition(std::move(parts));
}

Integer multinomial(const Composition& c) { return multinomial_of(c.n(), c.parts()); }

Integer beta(const Composition& c) {
    Integer acc = 0;
    const int k = c.size();
    for_each_submask(c.encode(), [&](FaceMask sub) {
        Composition d = Composition::decode(c.n(), sub);
        Integer term = multinomial(d);
        ((k - d.size()) % 2 == 0) ? acc += term : acc -= term;
    });
    return acc;
}

Integer beta_star(const Composition& c) {
    Integer acc = 0;
    const int k = c.size();
    for_each_submask(c.encode(), [&](FaceMask sub) {
        Composition d = Composition::decode(c.n(), sub);
        Integer term = multinomial_of(c.n() - 1, slash_one(d));
        ((k - d.size()) % 2 == 0) ? acc += term : acc -= term;
    });
    return acc;
}

Integer beta_star_oracle(const Composition& c, int max_n) {
    const int n = c.n();
    if (n > max_n)
        throw std::invalid_argument("beta_star_oracle: n exceeds enumeration bound");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    Integer count = 0;
    // alpha(n) = n: permute only the first n-1 positions.
    do {
        if (descent_composition(Permutation(im)) == c) ++count;
    } while (std::next_permutation(im.begin(), im.end() - (n > 0 ? 1 : 0)));
    return count;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    const FaceMask full = full_mask(n);
    for (FaceMask m = 0; m <= full; ++m) {
        out.push_back(Composition::decode(n, m));
        if (full == 0) break;
    }
    return out;
}

}  // namespace parthom
