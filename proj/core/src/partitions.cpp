#include "hypertrees/partitions.hpp"

#include <map>
#include <sstream>

namespace hypertrees {

namespace {

void partitions_rec(int remaining, int max_part, Partition& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        partitions_rec(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: negative n");
    std::vector<Partition> out;
    Partition stack;
    partitions_rec(n, n, stack, out);
    return out;
}

std::int64_t z_of(const Partition& lambda) {
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    std::int64_t z = 1;
    for (const auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z = checked_mul(z, part);
        z = checked_mul(z, factorial(m));
    }
    return z;
}

int fixed_points_of(const Partition& lambda) {
    int f = 0;
    for (int part : lambda)
        if (part == 1) ++f;
    return f;
}

Perm representative_of(const Partition& lambda) {
    int n = 0;
    for (int part : lambda) n += part;
    Perm sigma(n);
    int base = 0;
    for (int part : lambda) {
        for (int i = 0; i < part; ++i) sigma[base + i] = base + 1 + (i + 1) % part;
        base += part;
    }
    return sigma;
}

Partition cycle_type_of(const Perm& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    Partition type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = sigma[j] - 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

Perm identity_perm(int n) {
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    return sigma;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw DomainError("compose: size mismatch");
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

std::string partition_label(const Partition& lambda) {
    std::ostringstream os;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i) os << '+';
        os << lambda[i];
    }
    return os.str();
}

Rational binomial(const Rational& k, int i) {
    Rational r = 1;
    for (int j = 0; j < i; ++j) r *= (k - j) / Rational(j + 1);
    return r;
}

}  // namespace hypertrees
