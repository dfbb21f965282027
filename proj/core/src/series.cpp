#include "liefan/series.hpp"

namespace liefan {

SignedSeries SignedSeries::term(Weight w, Int coefficient) {
    SignedSeries s;
    s.add_term(std::move(w), std::move(coefficient));
    return s;
}

Int SignedSeries::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
}

void SignedSeries::add_term(const Weight& w, const Int& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(w, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

SignedSeries& SignedSeries::operator+=(const SignedSeries& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

SignedSeries SignedSeries::operator+(const SignedSeries& other) const {
    SignedSeries result = *this;
    result += other;
    return result;
}

SignedSeries SignedSeries::operator-() const {
    SignedSeries result;
    for (const auto& [w, c] : terms_) result.terms_.emplace(w, -c);
    return result;
}

SignedSeries SignedSeries::scaled(const Int& factor) const {
    SignedSeries result;
    if (factor == 0) return result;
    for (const auto& [w, c] : terms_) result.terms_.emplace(w, c * factor);
    return result;
}

SignedSeries SignedSeries::shifted(const Weight& shift) const {
    SignedSeries result;
    for (const auto& [w, c] : terms_) result.terms_.emplace(w + shift, c);
    return result;
}

SignedSeries SignedSeries::truncated(const Rat& min_grade) const {
    SignedSeries result;
    for (const auto& [w, c] : terms_)
        if (w.grade() >= min_grade) result.terms_.emplace(w, c);
    return result;
}

SignedSeries SignedSeries::product_truncated(const SignedSeries& a, const SignedSeries& b,
                                             const std::optional<Rat>& min_grade) {
    SignedSeries result;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            if (min_grade && wa.grade() + wb.grade() < *min_grade) continue;
            result.add_term(wa + wb, ca * cb);
        }
    }
    return result;
}

std::optional<Rat> SignedSeries::min_term_grade() const {
    std::optional<Rat> best;
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (!best || w.grade() < *best) best = w.grade();
    }
    return best;
}

} // namespace liefan
