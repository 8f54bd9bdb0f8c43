#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oforge {

/// Permutation of {0,...,k-1}, stored as the image table.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::size_t> images);

    static Perm identity(std::size_t k);
    static Perm transposition(std::size_t k, std::size_t a, std::size_t b);
    /// cycle (c[0] c[1] ... c[m-1]) inside Sym(k)
    static Perm cycle(std::size_t k, const std::vector<std::size_t>& c);

    std::size_t size() const { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_[i]; }

    bool is_identity() const;
    Perm inverse() const;
    /// (a * b)(i) = a(b(i))
    friend Perm operator*(const Perm& a, const Perm& b);

    bool operator==(const Perm& o) const { return img_ == o.img_; }

    const std::vector<std::size_t>& images() const { return img_; }
    std::string str() const;

private:
    std::vector<std::size_t> img_;
};

std::vector<Perm> all_perms(std::size_t k);

/// The permutation of {0,...,sum(sizes)-1} that reshuffles blocks of the given
/// sizes the way sigma reshuffles slots: position t of the j-th block of the
/// permuted arrangement (whose block sizes are sizes[sigma(j)]) is sent to
/// position t of block sigma(j) in the original arrangement.  This is the
/// permutation appearing in the operad equivariance law
///   compose(x*sigma; y_{sigma(0)},...) = compose(x; y_0,...) * block_perm.
Perm block_perm(const Perm& sigma, const std::vector<std::size_t>& sizes);

} // namespace oforge
