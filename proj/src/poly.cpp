#include "ncstar/poly.hpp"

namespace ncstar {

Poly::Poly(const Word& w, Scalar c) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

Scalar Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Family> Poly::family() const {
    for (const auto& [w, c] : terms_)
        if (!w.is_unit()) return w[0].family();
    return std::nullopt;
}

void Poly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, k] : terms_) k *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

Poly Poly::star() const {
    Poly out;
    for (const auto& [w, c] : terms_) out.add_term(w.star(), c.conj());
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (c == Scalar(1))
            out += w.str();
        else
            out += "(" + c.str() + ")" + (w.is_unit() ? "" : "·" + w.str());
    }
    return out;
}

Poly mul(const Poly& p, const Poly& q) {
    auto fp = p.family(), fq = q.family();
    if (fp && fq && *fp != *fq)
        throw RosterMismatch(std::string("cannot multiply ") + family_name(*fp) + " and " + family_name(*fq) +
                             " polynomials");
    return p * q;
}

Poly add(const Poly& p, const Poly& q) {
    auto fp = p.family(), fq = q.family();
    if (fp && fq && *fp != *fq)
        throw RosterMismatch(std::string("cannot add ") + family_name(*fp) + " and " + family_name(*fq) +
                             " polynomials");
    return p + q;
}

void TensorPoly::check(const TensorPoly& o) const {
    if (left_ != o.left_ || right_ != o.right_) throw RosterMismatch("tensor legs use different rosters");
}

void TensorPoly::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    a.check(b);
    TensorPoly out(a.left_, a.right_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
}

TensorPoly TensorPoly::star() const {
    TensorPoly out(left_, right_);
    for (const auto& [k, c] : terms_) out.add_term(k.first.star(), k.second.star(), c.conj());
    return out;
}

TensorPoly TensorPoly::elementary(Family left, const Poly& l, Family right, const Poly& r) {
    TensorPoly out(left, right);
    for (const auto& [wl, cl] : l.terms())
        for (const auto& [wr, cr] : r.terms()) out.add_term(wl, wr, cl * cr);
    return out;
}

TensorPoly TensorPoly::unit(Family left, Family right) {
    TensorPoly out(left, right);
    out.add_term(Word{}, Word{}, 1);
    return out;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (!(c == Scalar(1))) out += "(" + c.str() + ")·";
        out += k.first.str() + " ⊗ " + k.second.str();
    }
    return out;
}

void TensorHom::set_image(Generator g, TensorPoly image) {
    if (g.family != source_) throw RosterMismatch("generator outside the source roster");
    TensorPoly starred = image.star();
    images_.insert_or_assign(g, std::make_pair(std::move(image), std::move(starred)));
}

const TensorPoly& TensorHom::image(Generator g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw RosterMismatch("no image for generator " + g.name());
    return it->second.first;
}

TensorPoly TensorHom::apply(const Poly& p) const {
    TensorPoly out(left_, right_);
    for (const auto& [w, c] : p.terms()) {
        TensorPoly acc = TensorPoly::unit(left_, right_);
        for (const Letter& l : w) {
            if (l.family() != source_) throw RosterMismatch("letter " + l.str() + " outside the source roster");
            auto it = images_.find(l.generator());
            if (it == images_.end()) throw RosterMismatch("no image for generator " + l.str());
            acc = acc * (l.starred() ? it->second.second : it->second.first);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

TensorPoly comultiply_generator(int i, int j, int n) {
    TensorPoly out(Family::UnitaryU, Family::UnitaryU);
    for (int k = 1; k <= n; ++k) out.add_term(Word(u(i, k)), Word(u(k, j)), 1);
    return out;
}

TensorHom comultiplication(int n) {
    TensorHom hom(Family::UnitaryU, Family::UnitaryU, Family::UnitaryU);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) hom.set_image(u(i, j).generator(), comultiply_generator(i, j, n));
    return hom;
}

TensorHom sphere_coaction(int n, bool left) {
    TensorHom hom(Family::SphereX, Family::UnitaryU, Family::SphereX);
    for (int i = 1; i <= n; ++i) {
        TensorPoly img(Family::UnitaryU, Family::SphereX);
        for (int j = 1; j <= n; ++j) img.add_term(Word(left ? u(i, j) : u(j, i)), Word(x(j)), 1);
        hom.set_image(x(i).generator(), std::move(img));
    }
    return hom;
}

TensorHom tuple_coaction(int n, bool left) {
    TensorHom hom(Family::TupleX, Family::OrthoU, Family::TupleX);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            TensorPoly img(Family::OrthoU, Family::TupleX);
            for (int j = 1; j <= n; ++j) img.add_term(Word(left ? v(i, j) : v(j, i)), Word(t(j, k)), 1);
            hom.set_image(t(i, k).generator(), std::move(img));
        }
    return hom;
}

}  // namespace ncstar
