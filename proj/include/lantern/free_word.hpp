#pragma once

#include <string>
#include <vector>

namespace lantern {

// Reduced word in a free group. Letters are nonzero ints: +i stands for the
// generator x_i, -i for its inverse. The letter sequence is kept freely
// reduced at all times; words of any length are allowed.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<int> letters);

    static FreeWord generator(int index, int exponent = 1);

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord& operator*=(const FreeWord& rhs);

    // conjugate u * w * u^-1
    FreeWord conjugated_by(const FreeWord& u) const;

    // largest generator index appearing (0 for the empty word)
    int max_index() const;

    std::string str() const;

    bool operator==(const FreeWord&) const = default;

private:
    std::vector<int> letters_;

    void push_reduced(int letter);
    friend class MappingClassAction;
};

}  // namespace lantern
