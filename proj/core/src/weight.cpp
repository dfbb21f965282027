#include "liefan/weight.hpp"

#include "liefan/errors.hpp"

#include <sstream>
#include <utility>

namespace liefan {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ConfigError("malformed rational literal: " + text);
    }
    try {
        Rat value(text);
        if (value.get_den() == 0) throw ConfigError("zero denominator in rational: " + text);
        value.canonicalize();
        return value;
    } catch (const std::invalid_argument&) {
        throw ConfigError("malformed rational literal: " + text);
    }
}

std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

std::string int_to_string(const Int& value) {
    return value.get_str();
}

bool rat_is_integer(const Rat& value) {
    return value.get_den() == 1;
}

Int isqrt_floor(const Rat& value) {
    if (value < 0) throw ConfigError("isqrt_floor of negative value");
    // floor(sqrt(p/q)) = floor(sqrt(p*q)/q)
    Int pq = value.get_num() * value.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
    return root / value.get_den();
}

Weight::Weight(std::vector<Rat> finite, Rat level, Rat grade)
    : finite_(std::move(finite)), level_(std::move(level)), grade_(std::move(grade)) {}

Weight Weight::zero(int dim) {
    return Weight(std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)), 0, 0);
}

Weight Weight::classical(std::vector<Rat> finite) {
    return Weight(std::move(finite), 0, 0);
}

Weight Weight::delta(int dim) {
    return Weight(std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)), 0, 1);
}

bool Weight::is_zero() const {
    return level_ == 0 && grade_ == 0 && classical_is_zero();
}

bool Weight::classical_is_zero() const {
    for (const Rat& c : finite_)
        if (c != 0) return false;
    return true;
}

void Weight::check_same_dim(const Weight& other) const {
    if (finite_.size() != other.finite_.size())
        throw ConfigError("weight dimension mismatch: " + std::to_string(finite_.size()) +
                          " vs " + std::to_string(other.finite_.size()));
}

Weight Weight::operator+(const Weight& other) const {
    check_same_dim(other);
    std::vector<Rat> finite(finite_.size());
    for (std::size_t i = 0; i < finite_.size(); ++i) finite[i] = finite_[i] + other.finite_[i];
    return Weight(std::move(finite), level_ + other.level_, grade_ + other.grade_);
}

Weight Weight::operator-(const Weight& other) const {
    check_same_dim(other);
    std::vector<Rat> finite(finite_.size());
    for (std::size_t i = 0; i < finite_.size(); ++i) finite[i] = finite_[i] - other.finite_[i];
    return Weight(std::move(finite), level_ - other.level_, grade_ - other.grade_);
}

Weight Weight::operator-() const {
    std::vector<Rat> finite(finite_.size());
    for (std::size_t i = 0; i < finite_.size(); ++i) finite[i] = -finite_[i];
    return Weight(std::move(finite), -level_, -grade_);
}

Weight Weight::scaled(const Rat& factor) const {
    std::vector<Rat> finite(finite_.size());
    for (std::size_t i = 0; i < finite_.size(); ++i) finite[i] = finite_[i] * factor;
    return Weight(std::move(finite), level_ * factor, grade_ * factor);
}

Weight Weight::with_grade(Rat grade) const {
    return Weight(finite_, level_, std::move(grade));
}

bool Weight::operator==(const Weight& other) const {
    return finite_.size() == other.finite_.size() && compare(*this, other) == 0;
}

int Weight::compare(const Weight& a, const Weight& b) {
    int c = cmp(a.grade_, b.grade_);
    if (c != 0) return c;
    c = cmp(a.level_, b.level_);
    if (c != 0) return c;
    if (a.finite_.size() != b.finite_.size())
        return a.finite_.size() < b.finite_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.finite_.size(); ++i) {
        c = cmp(a.finite_[i], b.finite_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Weight::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < finite_.size(); ++i) {
        if (i) out << ",";
        out << rat_to_string(finite_[i]);
    }
    out << "; " << rat_to_string(level_) << "; " << rat_to_string(grade_) << ")";
    return out.str();
}

} // namespace liefan
