#include "xyz/tensor3.hpp"

#include <string>
#include <vector>

#include "xyz/errors.hpp"

namespace xyz {

Tensor3 Tensor3::unflatten(const BitVector& v, Shape3 shape) {
    if (v.size() != shape[0] * shape[1] * shape[2])
        throw InputError("unflatten: vector length " + std::to_string(v.size()) + " does not match shape");
    Tensor3 t(shape);
    t.data_ = v;
    return t;
}

Tensor3& Tensor3::operator^=(const Tensor3& o) {
    if (shape_ != o.shape_) throw InputError("tensor shapes differ");
    data_ ^= o.data_;
    return *this;
}

Tensor3& Tensor3::operator&=(const Tensor3& o) {
    if (shape_ != o.shape_) throw InputError("tensor shapes differ");
    data_ &= o.data_;
    return *this;
}

Tensor3 apply_axis(const BitMatrix& h, const Tensor3& t, int axis) {
    if (axis < 0 || axis > 2) throw InputError("axis must be 0, 1 or 2");
    if (h.cols() != t.dim(axis))
        throw InputError("apply_axis: matrix has " + std::to_string(h.cols()) + " columns but axis " +
                         std::to_string(axis) + " has length " + std::to_string(t.dim(axis)));
    Shape3 out_shape = t.shape();
    out_shape[axis] = h.rows();
    Tensor3 out(out_shape);

    // View the tensor as (outer, axis, inner); each output fiber is a sum of input fibers.
    std::size_t outer = 1, inner = 1;
    for (int a = 0; a < axis; ++a) outer *= t.dim(a);
    for (int a = axis + 1; a < 3; ++a) inner *= t.dim(a);
    const std::size_t len_in = t.dim(axis), len_out = h.rows();

    std::vector<std::vector<std::size_t>> row_support(len_out);
    for (std::size_t r = 0; r < len_out; ++r) row_support[r] = h.row(r).support();

    const BitVector& src = t.flatten();
    BitVector& dst = out.bits();
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t r = 0; r < len_out; ++r)
            for (std::size_t c : row_support[r]) {
                std::size_t sbase = (o * len_in + c) * inner, dbase = (o * len_out + r) * inner;
                for (std::size_t s = src.next_set(sbase); s < sbase + inner; s = src.next_set(s + 1))
                    dst.flip(dbase + (s - sbase));
            }
    return out;
}

Tensor3 plane_tensor(Shape3 shape, int fixed_axis, std::size_t index) {
    if (fixed_axis < 0 || fixed_axis > 2) throw InputError("axis must be 0, 1 or 2");
    if (index >= shape[fixed_axis]) throw InputError("plane index out of range");
    Tensor3 t(shape);
    for (std::size_t i = 0; i < shape[0]; ++i)
        for (std::size_t j = 0; j < shape[1]; ++j)
            for (std::size_t k = 0; k < shape[2]; ++k) {
                std::size_t c[3] = {i, j, k};
                if (c[fixed_axis] == index) t.set(i, j, k);
            }
    return t;
}

}  // namespace xyz
