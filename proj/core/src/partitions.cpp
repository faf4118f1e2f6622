#include "spincrystal/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace spincrystal {

int degree(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

bool is_valid_partition(const Partition& lam) {
    for (size_t r = 0; r < lam.size(); ++r) {
        if (lam[r] <= 0) return false;
        if (r > 0 && lam[r] > lam[r - 1]) return false;
    }
    return true;
}

bool is_h_strict(const Partition& lam, const CartanType& ct) {
    if (!is_valid_partition(lam)) return false;
    for (size_t r = 0; r + 1 < lam.size(); ++r) {
        if (lam[r] == lam[r + 1]) {
            if (ct.is_infinite()) return false;  // infinity divides nothing positive
            if (lam[r] % ct.h() != 0) return false;
        }
    }
    return true;
}

bool is_restricted(const Partition& lam, const CartanType& ct) {
    if (!is_h_strict(lam, ct)) return false;
    if (ct.is_infinite()) return true;
    int h = ct.h();
    for (size_t r = 0; r < lam.size(); ++r) {
        int next = (r + 1 < lam.size()) ? lam[r + 1] : 0;
        int diff = lam[r] - next;
        if (lam[r] % h == 0 ? diff >= h : diff > h) return false;
    }
    return true;
}

Residue residue(int col, const CartanType& ct) {
    if (col < 1) throw std::invalid_argument("residue: column must be >= 1");
    if (ct.is_infinite()) return col - 1;
    int h = ct.h();
    int t = (col - 1) % h;
    return std::min(t, h - 1 - t);
}

ContentVector content(const Partition& lam, const CartanType& ct) {
    ContentVector gamma;
    for (int len : lam)
        for (int c = 1; c <= len; ++c) gamma.add(residue(c, ct));
    return gamma;
}

namespace {

void enum_rec(int remaining, int max_part, bool finite_h, int h,
              Partition& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        bool repeat = !acc.empty() && acc.back() == p;
        if (repeat && (!finite_h || p % h != 0)) continue;
        acc.push_back(p);
        enum_rec(remaining - p, p, finite_h, h, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_h_strict(int n, const CartanType& ct) {
    if (n < 0) throw std::invalid_argument("enumerate_h_strict: n < 0");
    std::vector<Partition> out;
    Partition acc;
    enum_rec(n, n, !ct.is_infinite(), ct.is_infinite() ? 0 : ct.h(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_restricted(int n, const CartanType& ct) {
    std::vector<Partition> out;
    for (auto& lam : enumerate_h_strict(n, ct))
        if (is_restricted(lam, ct)) out.push_back(lam);
    return out;
}

Partition remove_bar(const Partition& lam, const Bar& bar, const CartanType& ct) {
    Partition mu = lam;
    if (bar.kind == BarKind::B1) {
        mu[bar.row1 - 1] -= ct.h();
    } else {
        mu[bar.row1 - 1] = 0;
        mu[bar.row2 - 1] = 0;
    }
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return mu;
}

std::vector<Bar> h_bars(const Partition& lam, const CartanType& ct) {
    std::vector<Bar> bars;
    if (ct.is_infinite()) return bars;  // no infinity-bars
    int h = ct.h();
    auto has_row = [&](int len) {
        return std::find(lam.begin(), lam.end(), len) != lam.end();
    };
    for (int r = 1; r <= static_cast<int>(lam.size()); ++r) {
        if (lam[r - 1] < h) continue;
        if (lam[r - 1] % h != 0 && has_row(lam[r - 1] - h)) continue;
        Bar b{BarKind::B1, r, 0};
        if (is_h_strict(remove_bar(lam, b, ct), ct)) bars.push_back(b);
    }
    for (int r = 1; r <= static_cast<int>(lam.size()); ++r)
        for (int s = r + 1; s <= static_cast<int>(lam.size()); ++s)
            if (lam[r - 1] + lam[s - 1] == h) {
                Bar b{BarKind::B2, r, s};
                if (is_h_strict(remove_bar(lam, b, ct), ct)) bars.push_back(b);
            }
    return bars;
}

Partition bar_core(const Partition& lam, const CartanType& ct) {
    Partition cur = lam;
    for (;;) {
        auto bars = h_bars(cur, ct);
        if (bars.empty()) return cur;
        cur = remove_bar(cur, bars.front(), ct);
    }
}

int bar_weight(const Partition& lam, const CartanType& ct) {
    if (ct.is_infinite()) return 0;
    return (degree(lam) - degree(bar_core(lam, ct))) / ct.h();
}

int b_of(const Partition& lam, const CartanType& ct) {
    int b = 0;
    for (int p : lam)
        if (ct.is_infinite() || p % ct.h() != 0) ++b;
    return b;
}

int a_of(const Partition& lam, const CartanType& ct) {
    return degree(lam) - b_of(lam, ct);
}

std::string to_string(const Partition& lam) {
    std::string s = "[";
    for (size_t r = 0; r < lam.size(); ++r) {
        if (r) s += ",";
        s += std::to_string(lam[r]);
    }
    return s + "]";
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') s += c;
    Partition lam;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
            lam.push_back(v);
        }
    }
    if (!is_valid_partition(lam))
        throw std::invalid_argument("parse_partition: parts must be positive and weakly decreasing");
    return lam;
}

}  // namespace spincrystal
