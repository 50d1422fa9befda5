#ifndef FIXSUB_PERM_HPP
#define FIXSUB_PERM_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixsub {

/// A permutation of {0, ..., n-1}, stored as its image table.
class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        const int n = static_cast<int>(img_.size());
        std::vector<bool> seen(n, false);
        for (int v : img_) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("Perm: image table is not a bijection");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Perm(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int v = 0; v < degree(); ++v)
            if (img_[v] != v) return false;
        return true;
    }

    /// Composition acting left-to-right on points: (a.then(b))(v) = b(a(v)).
    Perm then(const Perm& b) const {
        check_degree(b);
        std::vector<int> img(img_.size());
        for (std::size_t v = 0; v < img_.size(); ++v) img[v] = b.img_[img_[v]];
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    /// Standard composition: (a.compose(b))(v) = a(b(v)).
    Perm compose(const Perm& b) const { return b.then(*this); }

    Perm inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t v = 0; v < img_.size(); ++v) img[img_[v]] = static_cast<int>(v);
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// One-line image format: "p0 p1 ... p(n-1)".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t v = 0; v < img_.size(); ++v) {
            if (v) os << ' ';
            os << img_[v];
        }
        return os.str();
    }

    static Perm parse(const std::string& text) {
        std::istringstream is(text);
        std::vector<int> img;
        int v;
        while (is >> v) img.push_back(v);
        if (!is.eof()) throw std::invalid_argument("Perm: trailing garbage in image list");
        return Perm(std::move(img));
    }

private:
    void check_degree(const Perm& o) const {
        if (degree() != o.degree())
            throw std::invalid_argument("Perm: degree mismatch");
    }

    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.images()) h = h * 1099511628211ULL ^ static_cast<std::size_t>(v);
        return h;
    }
};

} // namespace fixsub

#endif // FIXSUB_PERM_HPP
