#pragma once

#include <type_traits>

namespace xmscarf {

/// Value with first and second derivative, propagated through + * /.
template <class T>
struct Jet {
    T value{};
    T d1{};
    T d2{};
};

template <class T>
Jet<T> operator+(const Jet<T>& f, const Jet<T>& g) {
    return {f.value + g.value, f.d1 + g.d1, f.d2 + g.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& f, const Jet<T>& g) {
    return {f.value - g.value, f.d1 - g.d1, f.d2 - g.d2};
}

template <class T, class S>
    requires std::is_arithmetic_v<S>
Jet<T> operator*(S c, const Jet<T>& f) {
    return {c * f.value, c * f.d1, c * f.d2};
}

template <class T>
Jet<T> operator*(const Jet<T>& f, const Jet<T>& g) {
    return {f.value * g.value,
            f.d1 * g.value + f.value * g.d1,
            f.d2 * g.value + T(2) * f.d1 * g.d1 + f.value * g.d2};
}

template <class T>
Jet<T> operator/(const Jet<T>& f, const Jet<T>& g) {
    const T q = f.value / g.value;
    const T q1 = (f.d1 - q * g.d1) / g.value;
    const T q2 = (f.d2 - T(2) * q1 * g.d1 - q * g.d2) / g.value;
    return {q, q1, q2};
}

/// Chain rule for f(u(x)) given the jet of f in u and of u in x.
template <class T, class U>
Jet<T> compose(const Jet<T>& f_of_u, const Jet<U>& u) {
    return {f_of_u.value,
            f_of_u.d1 * u.d1,
            f_of_u.d2 * u.d1 * u.d1 + f_of_u.d1 * u.d2};
}

} // namespace xmscarf
