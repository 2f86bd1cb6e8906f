#include "ncstar/words.hpp"

#include <algorithm>

namespace ncstar {

const char* family_name(Family f) {
    switch (f) {
        case Family::SphereX: return "sphere";
        case Family::UnitaryU: return "unitary";
        case Family::OrthoU: return "orthogonal";
        case Family::TupleX: return "tuple";
    }
    return "?";
}

std::string Generator::name() const {
    const char* stem = (family == Family::SphereX || family == Family::TupleX) ? "x" : "u";
    if (family == Family::SphereX) return stem + std::to_string(row);
    if (row < 10 && col < 10) return stem + std::to_string(row) + std::to_string(col);
    return std::string(stem) + "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

std::string Letter::str() const { return generator().name() + (starred() ? "*" : ""); }

Word Word::operator*(const Word& o) const {
    Word w;
    w.letters_.reserve(letters_.size() + o.letters_.size());
    w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    return w;
}

Word Word::star() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->star());
    return w;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i].str();
    }
    return out;
}

std::size_t Word::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : letters_) h = (h ^ l.key()) * 1099511628211ull;
    return h ^ letters_.size();
}

Roster Roster::sphere(int n) {
    Roster r{Family::SphereX, n, {}};
    for (int i = 1; i <= n; ++i) r.generators.push_back({Family::SphereX, static_cast<std::uint8_t>(i), 0});
    return r;
}

Roster Roster::square(Family family, int n) {
    Roster r{family, n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            r.generators.push_back({family, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
    return r;
}

bool Roster::contains(Generator g) const {
    return std::binary_search(generators.begin(), generators.end(), g);
}

std::vector<Letter> Roster::letters() const {
    std::vector<Letter> out;
    for (const Generator& g : generators) {
        out.emplace_back(g, false);
        if (!is_self_adjoint(family)) out.emplace_back(g, true);
    }
    return out;
}

std::vector<Word> Roster::words_up_to(int bound) const {
    const auto ls = letters();
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (int d = 1; d <= bound; ++d) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (const Letter& l : ls) out.push_back(out[k] * Word(l));
        begin = end;
    }
    return out;
}

}  // namespace ncstar
