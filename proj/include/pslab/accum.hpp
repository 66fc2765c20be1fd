#pragma once

#include <complex>
#include <cstddef>

namespace pslab {

// Kahan-Babuska-Neumaier compensated accumulator.  The running compensation
// captures the rounding error of every += so a fold of n terms carries an
// error independent of n (up to one final rounding).
template <class T>
struct kbn_sum {
    T s{0};
    T c{0};

    void add(T x) {
        T t = s + x;
        if ((s >= x && s >= -x) || (-s >= x && -s >= -x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }

    void add(const kbn_sum& other) {
        add(other.s);
        add(other.c);
    }

    T value() const { return s + c; }
};

template <class T>
struct kbn_complex_sum {
    kbn_sum<T> re, im;

    void add(std::complex<T> z) {
        re.add(z.real());
        im.add(z.imag());
    }

    void add(const kbn_complex_sum& other) {
        re.add(other.re);
        im.add(other.im);
    }

    std::complex<T> value() const { return {re.value(), im.value()}; }
};

}  // namespace pslab
