#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncstar {

/// Generator families. The numeric tag is the leading key of the letter order.
enum class Family : std::uint8_t {
    SphereX = 0,    ///< x_i of a complex sphere
    UnitaryU = 1,   ///< u_ij of C(U_n^{eps,eta})
    OrthoU = 2,     ///< u_ij of C(O_n^eps), self-adjoint
    TupleX = 3,     ///< x_ij of the tuple space, self-adjoint
};

/// Self-adjoint families never carry a star flag.
constexpr bool is_self_adjoint(Family f) { return f == Family::OrthoU || f == Family::TupleX; }

const char* family_name(Family f);

/// A generator identifier: sphere coordinates use col = 0.
struct Generator {
    Family family = Family::SphereX;
    std::uint8_t row = 0;  // 1-based
    std::uint8_t col = 0;  // 1-based, 0 for sphere coordinates

    friend auto operator<=>(const Generator&, const Generator&) = default;
    std::string name() const;
};

/// Generator with an optional star. Ordered by (family, row, col, starred),
/// unstarred before starred; the packed key realises exactly that order.
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(Generator g, bool starred)
        : key_(static_cast<std::uint32_t>(g.family) << 24 | static_cast<std::uint32_t>(g.row) << 16 |
               static_cast<std::uint32_t>(g.col) << 8 | (starred && !is_self_adjoint(g.family) ? 1u : 0u)) {}

    Generator generator() const {
        return {static_cast<Family>(key_ >> 24), static_cast<std::uint8_t>(key_ >> 16),
                static_cast<std::uint8_t>(key_ >> 8)};
    }
    Family family() const { return static_cast<Family>(key_ >> 24); }
    int row() const { return static_cast<int>((key_ >> 16) & 0xff); }
    int col() const { return static_cast<int>((key_ >> 8) & 0xff); }
    bool starred() const { return (key_ & 1u) != 0; }
    Letter star() const { return Letter(generator(), !starred()); }
    std::uint32_t key() const { return key_; }

    friend auto operator<=>(const Letter&, const Letter&) = default;
    std::string str() const;

private:
    std::uint32_t key_ = 0;
};

inline Letter x(int i, bool starred = false) {
    return {Generator{Family::SphereX, static_cast<std::uint8_t>(i), 0}, starred};
}
inline Letter u(int i, int j, bool starred = false) {
    return {Generator{Family::UnitaryU, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}, starred};
}
inline Letter v(int i, int j) {
    return {Generator{Family::OrthoU, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}, false};
}
inline Letter t(int i, int j) {
    return {Generator{Family::TupleX, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}, false};
}

/// Word in the free monoid on letters; the empty word is the unit.
/// Compared length-lexicographically.
class Word {
public:
    using Storage = boost::container::small_vector<Letter, 4>;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters_(ls) {}
    explicit Word(Letter l) { letters_.push_back(l); }
    template <class It>
    Word(It first, It last) : letters_(first, last) {}

    std::size_t degree() const { return letters_.size(); }
    bool is_unit() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word operator*(const Word& o) const;
    /// Reverses and toggles stars.
    Word star() const;
    /// Sub-word [pos, pos + len).
    Word slice(std::size_t pos, std::size_t len) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    std::string str() const;
    std::size_t hash() const;

private:
    Storage letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// All generators of a presentation, in letter order.
struct Roster {
    Family family = Family::SphereX;
    int n = 0;
    std::vector<Generator> generators;

    static Roster sphere(int n);
    static Roster square(Family family, int n);

    bool contains(Generator g) const;
    /// Letters available in this roster (with stars unless self-adjoint).
    std::vector<Letter> letters() const;
    /// Every word of degree <= bound, in length-lex order.
    std::vector<Word> words_up_to(int bound) const;
    friend bool operator==(const Roster&, const Roster&) = default;
};

}  // namespace ncstar
