#include "abelcenter/moments.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace abelcenter {

Rational moment(const Poly& P, const Poly& Q, const Interval& iv, int l) {
    if (l < 0) throw std::invalid_argument("moment: l must be nonnegative");
    return definite_integral(P.pow(static_cast<unsigned>(l)) * derivative(Q), iv);
}

MomentVector moment_vector(const Poly& P, const Poly& Q, const Interval& iv, int K) {
    if (K < 0) K = std::max(P.degree(), 0) + std::max(Q.degree(), 0) + 2;
    MomentVector mv{{}, P, Q, iv};
    mv.values.reserve(static_cast<size_t>(K) + 1);
    Poly q = derivative(Q);
    Poly pow = Poly::constant(Rational(1));
    for (int l = 0; l <= K; ++l) {
        mv.values.push_back(definite_integral(pow * q, iv));
        pow = pow * P;
    }
    return mv;
}

std::vector<MultiIndex> melnikov_indices(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("melnikov_indices: k must be odd and >= 5");
    int s = (k + 1) / 2;
    std::vector<MultiIndex> out;
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            MultiIndex a;
            a.entries.assign(static_cast<size_t>(s), 2);
            a.entries[static_cast<size_t>(i)] = 1;
            a.entries[static_cast<size_t>(j)] = 1;
            out.push_back(std::move(a));
        }
    }
    return out;
}

Rational iterated_integral(const MultiIndex& alpha, const Poly& P, const Poly& Q,
                           const Interval& iv) {
    if (alpha.entries.empty()) throw std::invalid_argument("iterated_integral: empty index");
    Poly h[3] = {Poly(), derivative(Q), derivative(P)};
    Poly acc = Poly::constant(Rational(1));
    for (auto it = alpha.entries.rbegin(); it != alpha.entries.rend(); ++it) {
        if (*it != 1 && *it != 2)
            throw std::invalid_argument("iterated_integral: index entries must be 1 or 2");
        acc = antiderivative(h[*it] * acc, iv.a);
    }
    return acc.eval(iv.b);
}

long long weight(const MultiIndex& alpha, int k) {
    long long sum = 0;
    for (int e : alpha.entries) sum += e;
    if (sum != k - 1)
        throw PreconditionError("weight: entries of alpha must sum to k - 1");
    long long n = alpha.entries.size() % 2 == 0 ? 1 : -1;
    long long partial = 0;
    for (int e : alpha.entries) {
        partial += e;
        n *= k - partial;
    }
    return n;
}

namespace {

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r = r * Rational(i);
    return r;
}

} // namespace

Rational melnikov_sum(int k, const Poly& P, const Poly& Q, const Interval& iv) {
    std::vector<MultiIndex> idx = melnikov_indices(k);
    std::vector<Rational> terms(idx.size());
    auto run = [&](size_t lo, size_t hi) {
        for (size_t t = lo; t < hi; ++t)
            terms[t] = Rational(static_cast<long>(weight(idx[t], k))) *
                       iterated_integral(idx[t], P, Q, iv);
    };
    size_t workers = std::min<size_t>(static_cast<size_t>(worker_count()), idx.size());
    if (workers <= 1) {
        run(0, idx.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (idx.size() + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t lo = w * chunk;
            size_t hi = std::min(idx.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    /* In-order combine: independent of how the terms were partitioned. */
    Rational sum(0);
    for (const Rational& t : terms) sum = sum + t;
    return sum;
}

Rational reduce_by_parts(int m0, int m1, int m2, const Poly& P, const Poly& Q,
                         const Interval& iv) {
    if (m0 < 0 || m1 < 0 || m2 < 0)
        throw std::invalid_argument("reduce_by_parts: exponents must be nonnegative");
    Poly q = derivative(Q);
    Rational sum(0);
    for (int i = 0; i <= m1; ++i) {
        Poly inner = antiderivative(P.pow(static_cast<unsigned>(m1 + m2 - i)) * q, iv.a);
        Rational term =
            definite_integral(P.pow(static_cast<unsigned>(m0 + i)) * q * inner, iv);
        Rational coeff = Rational(1) / (factorial(m0) * factorial(m2) * factorial(i) *
                                        factorial(m1 - i));
        if ((m0 + m1 - i) % 2 != 0) coeff = -coeff;
        sum = sum + coeff * term;
    }
    return sum;
}

Rational melnikov_sum_by_parts(int k, const Poly& P, const Poly& Q, const Interval& iv) {
    Rational sum(0);
    for (const MultiIndex& a : melnikov_indices(k)) {
        /* 2-block sizes before, between, and after the two 1-entries. */
        size_t first = 0;
        while (a.entries[first] != 1) ++first;
        size_t second = first + 1;
        while (a.entries[second] != 1) ++second;
        int m0 = static_cast<int>(first);
        int m1 = static_cast<int>(second - first - 1);
        int m2 = static_cast<int>(a.entries.size() - second - 1);
        sum = sum + Rational(static_cast<long>(weight(a, k))) *
                        reduce_by_parts(m0, m1, m2, P, Q, iv);
    }
    return sum;
}

Rational melnikov_closed(int j, const Poly& P, const Poly& Q, const Interval& iv) {
    if (!P.eval(iv.a).is_zero() || !P.eval(iv.b).is_zero() || !Q.eval(iv.a).is_zero() ||
        !Q.eval(iv.b).is_zero())
        throw PreconditionError("melnikov_closed: P and Q must vanish at both endpoints");
    Poly p = derivative(P);
    switch (j) {
    case 1:
        return definite_integral(Q * Q * p, iv);
    case 2:
        return definite_integral(Q * Q * P * p, iv);
    case 3: {
        Poly inner = antiderivative(Q * p, iv.a);
        return Rational(2) * definite_integral(Q * Q * P * P * p, iv) +
               definite_integral(Q * P * p * inner, iv);
    }
    case 4: {
        Poly inner = antiderivative(Q * p, iv.a);
        return definite_integral(Q * Q * P * P * P * p, iv) +
               definite_integral(Q * P * P * p * inner, iv);
    }
    default:
        throw std::invalid_argument("melnikov_closed: j must be in 1..4");
    }
}

int worker_count() {
    if (const char* env = std::getenv("ABEL_CENTER_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n >= 1) return static_cast<int>(std::min(n, 64L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

} // namespace abelcenter
