#pragma once

// Total bijections on 0-based vertex ids.  Bijectivity is enforced at
// construction so downstream code never re-validates.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace subsum {

class VertexPermutation {
public:
    explicit VertexPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v])
                throw std::invalid_argument("mapping is not a bijection on the vertex ids");
            seen[v] = true;
        }
    }

    static VertexPermutation identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = i;
        return VertexPermutation(std::move(im));
    }

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }

    // Acts as *this after other: (compose(other))(i) = (*this)(other(i)).
    VertexPermutation compose(const VertexPermutation& other) const {
        if (size() != other.size()) throw std::invalid_argument("permutation sizes disagree");
        std::vector<std::size_t> im(size());
        for (std::size_t i = 0; i < size(); ++i) im[i] = image_[other.image_[i]];
        return VertexPermutation(std::move(im));
    }

    VertexPermutation inverse() const {
        std::vector<std::size_t> im(size());
        for (std::size_t i = 0; i < size(); ++i) im[image_[i]] = i;
        return VertexPermutation(std::move(im));
    }

    bool operator==(const VertexPermutation&) const = default;

private:
    std::vector<std::size_t> image_;
};

}  // namespace subsum
