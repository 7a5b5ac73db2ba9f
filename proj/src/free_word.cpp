#include "lantern/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lantern {

void FreeWord::push_reduced(int letter) {
    if (letter == 0)
        throw std::invalid_argument("free word letter must be nonzero");
    if (!letters_.empty() && letters_.back() == -letter)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

FreeWord::FreeWord(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int g : letters)
        push_reduced(g);
}

FreeWord FreeWord::generator(int index, int exponent) {
    if (index <= 0)
        throw std::invalid_argument("generator index must be positive");
    FreeWord w;
    int letter = exponent >= 0 ? index : -index;
    for (int k = 0; k < std::abs(exponent); ++k)
        w.letters_.push_back(letter);
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it);
    return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
    for (int g : rhs.letters_)
        push_reduced(g);
    return *this;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord w = *this;
    w *= rhs;
    return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const {
    return u * *this * u.inverse();
}

int FreeWord::max_index() const {
    int m = 0;
    for (int g : letters_)
        m = std::max(m, std::abs(g));
    return m;
}

std::string FreeWord::str() const {
    if (letters_.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            out += ' ';
        int g = letters_[i];
        out += 'x';
        out += std::to_string(std::abs(g));
        if (g < 0)
            out += "^-1";
    }
    return out;
}

}  // namespace lantern
