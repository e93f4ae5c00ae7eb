#include "arqkit/error.hpp"
#include "arqkit/sectional.hpp"

#include <algorithm>
#include <set>

namespace arqkit {

namespace {

int tau_power(const TranslationQuiver& w, int v, int k)
{
    for (; k > 0 && v >= 0; --k)
        v = w.tau(v);
    return v;
}

/// Indices t (1 <= t < len-1) with tau(P_{t+1}) = P_{t-1}.
std::vector<int> hooks(const TranslationQuiver& w, const std::vector<int>& p)
{
    std::vector<int> out;
    for (std::size_t t = 1; t + 1 < p.size(); ++t)
        if (w.tau(p[t + 1]) == p[t - 1])
            out.push_back(static_cast<int>(t));
    return out;
}

struct Shape {
    int k = 0;
    int l = 0;
};

std::optional<Shape> large_shape(const TranslationQuiver& w, int x, int y, const std::vector<int>& z,
                                 const std::vector<int>& yp)
{
    check_path(w, z);
    if (w.valuation(x, z.front()) == 0 || z.back() != y)
        return std::nullopt;
    if (yp.empty()) {
        if (z.size() < 2 || z[1] != w.tau_inv(x) || !is_sectional(w, z))
            return std::nullopt;
        for (std::size_t i = 1; i < z.size(); ++i)
            if (w.vertex(z[i]).projective)
                return std::nullopt;
        return Shape{static_cast<int>(z.size()) - 1, 0};
    }
    check_path(w, yp);
    if (yp.size() != z.size() || yp.front() != z.front() || yp.back() != y)
        return std::nullopt;
    auto hz = hooks(w, z);
    auto hy = hooks(w, yp);
    if (hz.size() != 1 || hy.size() != 1)
        return std::nullopt;
    const int l = hz[0];
    const int k = hy[0];
    const int n = static_cast<int>(z.size()) - 1;
    if (k + l != n)
        return std::nullopt;
    if (w.tau(yp[1]) != x || z[1] == yp[1] || z[n - 1] == yp[n - 1])
        return std::nullopt;
    for (int i = 1; i <= k; ++i)
        if (w.vertex(yp[i]).projective)
            return std::nullopt;
    auto eq = [&](int a, int v, int j) { return a >= 0 && tau_power(w, v, j) == a; };
    const int m = std::min(k, l);
    for (int i = 0; i <= m; ++i)
        if (!eq(yp[k - i], yp[k + i], i) || !eq(z[l - i], z[l + i], i))
            return std::nullopt;
    if (l <= k) {
        for (int i = 0; i <= k - l; ++i)
            if (!eq(yp[i], z[i + 2 * l], l))
                return std::nullopt;
    } else {
        for (int i = 0; i <= l - k; ++i)
            if (!eq(z[i], yp[i + 2 * k], k))
                return std::nullopt;
    }
    return Shape{k, l};
}

} // namespace

bool is_large_between(const TranslationQuiver& w, int x, int y, const std::vector<int>& z_path,
                      const std::vector<int>& y_path)
{
    return large_shape(w, x, y, z_path, y_path).has_value();
}

std::vector<int> inner_modules(const TranslationQuiver& w, int x, int y, const std::vector<int>& z_path,
                               const std::vector<int>& y_path)
{
    auto shape = large_shape(w, x, y, z_path, y_path);
    if (!shape)
        throw Error("paths do not witness a large mesh-complete subquiver");
    const int k = shape->k;
    const int l = shape->l;
    std::set<int> out;
    auto add = [&](int v, int j) {
        int t = tau_power(w, v, j);
        if (t < 0)
            throw Error("translate of " + w.vertex(v).id + " leaves the window");
        out.insert(t);
    };
    if (l == 0) {
        for (int i = 1; i <= k; ++i)
            out.insert(z_path[i]);
        return {out.begin(), out.end()};
    }
    const auto& z = z_path;
    const auto& yp = y_path;
    if (l <= k) {
        for (int i = 0; i <= k - l; ++i)
            for (int j = 0; j <= l; ++j)
                add(z[i + 2 * l], j);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= i; ++j)
                add(yp[k + i], j);
        for (int i = 1; i <= l; ++i)
            for (int j = 0; j < i; ++j)
                add(z[l + i], j);
    } else {
        for (int i = 0; i <= l - k; ++i)
            for (int j = 0; j <= k; ++j)
                add(yp[i + 2 * k], j);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= i; ++j)
                add(yp[k + i], j);
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j < i; ++j)
                add(z[l + i], j);
    }
    return {out.begin(), out.end()};
}

} // namespace arqkit
