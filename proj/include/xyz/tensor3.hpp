#pragma once

#include <array>
#include <cstddef>

#include "xyz/bits.hpp"

namespace xyz {

using Shape3 = std::array<std::size_t, 3>;

/// Binary 3-tensor. Entry (i,j,k) of shape (a,b,c) is bit i*b*c + j*c + k.
class Tensor3 {
   public:
    Tensor3() = default;
    explicit Tensor3(Shape3 shape) : shape_(shape), data_(shape[0] * shape[1] * shape[2]) {}
    static Tensor3 unflatten(const BitVector& v, Shape3 shape);

    const Shape3& shape() const { return shape_; }
    std::size_t dim(int axis) const { return shape_[axis]; }
    std::size_t size() const { return data_.size(); }
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * shape_[1] + j) * shape_[2] + k;
    }
    bool get(std::size_t i, std::size_t j, std::size_t k) const { return data_.get(index(i, j, k)); }
    void set(std::size_t i, std::size_t j, std::size_t k, bool v = true) { data_.set(index(i, j, k), v); }
    void flip(std::size_t i, std::size_t j, std::size_t k) { data_.flip(index(i, j, k)); }

    const BitVector& flatten() const { return data_; }
    BitVector& bits() { return data_; }
    std::size_t weight() const { return data_.popcount(); }

    Tensor3& operator^=(const Tensor3& o);
    friend Tensor3 operator^(Tensor3 a, const Tensor3& b) { return a ^= b; }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a ^= b; }
    Tensor3& operator&=(const Tensor3& o);
    friend Tensor3 operator&(Tensor3 a, const Tensor3& b) { return a &= b; }
    bool operator==(const Tensor3& o) const = default;

   private:
    Shape3 shape_{0, 0, 0};
    BitVector data_;
};

/// (h on one axis, identity on the others) applied to t, without forming the Kronecker product.
Tensor3 apply_axis(const BitMatrix& h, const Tensor3& t, int axis);

/// All-ones on the plane where coordinate `fixed_axis` equals `index`.
Tensor3 plane_tensor(Shape3 shape, int fixed_axis, std::size_t index);

}  // namespace xyz
