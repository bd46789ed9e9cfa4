#include "affinefc/classify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "affinefc/errors.hpp"

namespace affinefc {

namespace {

void append_run(std::vector<int>& w, int from, int to) {
    if (from <= to)
        for (int i = from; i <= to; ++i) w.push_back(i);
    else
        for (int i = from; i >= to; --i) w.push_back(i);
}

std::vector<int> zigzag_word_d(int n, bool bullet_end, int k, int h) {
    // A = s2 ... sn s_{n+1} s_{n+2},  B = sn ... s2 s1 s0
    std::vector<int> a, b;
    append_run(a, 2, n + 2);
    append_run(b, n, 0);
    std::vector<int> w;
    if (bullet_end) {
        w = {0, 1};
        for (int i = 0; i < k; ++i) {
            w.insert(w.end(), a.begin(), a.end());
            w.insert(w.end(), b.begin(), b.end());
        }
        if (h) w.insert(w.end(), a.begin(), a.end());
    } else {
        w = {n + 2, n + 1};
        for (int i = 0; i < k; ++i) {
            w.insert(w.end(), b.begin(), b.end());
            w.insert(w.end(), a.begin(), a.end());
        }
        if (h) w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

std::vector<int> zigzag_word_b(int n, int form, int k, int h) {
    // A = s2 ... sn s_{n+1},  B = sn ... s2 s1 s0
    std::vector<int> a, b;
    append_run(a, 2, n + 1);
    append_run(b, n, 0);
    std::vector<int> w;
    if (form == 1) {
        w = {0, 1};
        for (int i = 0; i < k; ++i) {
            w.insert(w.end(), a.begin(), a.end());
            w.insert(w.end(), b.begin(), b.end());
        }
        if (h) w.insert(w.end(), a.begin(), a.end());
    } else {
        w = {n + 1};
        for (int i = 0; i < k; ++i) {
            w.insert(w.end(), b.begin(), b.end());
            w.insert(w.end(), a.begin(), a.end());
        }
        if (h) w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

void require_family(const FcElement& fc, Family family, const char* what) {
    if (fc.graph().family() != family)
        throw WrongFamilyError(std::string(what) + ": wrong Coxeter family");
}

std::vector<int> odd_run(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; i += 2) v.push_back(i);
    return v;
}

// Candy layer skeleton shared by the three candy builders: even layers
// carry base_even plus the alternating fork letters, odd layers are
// base_odd.
std::vector<std::vector<int>> candy_layers(int m, const std::vector<int>& base_even,
                                           const std::vector<int>& base_odd,
                                           const std::vector<std::vector<int>>& forks) {
    std::vector<std::vector<int>> layers;
    for (int j = 0; j <= m; ++j) {
        if (j % 2 == 0) {
            std::vector<int> layer = base_even;
            for (const auto& fork : forks) layer.push_back(fork[(j / 2) % 2]);
            std::sort(layer.begin(), layer.end());
            layers.push_back(std::move(layer));
        } else {
            layers.push_back(base_odd);
        }
    }
    return layers;
}

FcElement element_from_layers(GraphPtr graph, const std::vector<std::vector<int>>& layers) {
    std::vector<int> w;
    for (const auto& layer : layers) w.insert(w.end(), layer.begin(), layer.end());
    return cartier_foata(Word{std::move(graph), std::move(w)});
}

std::optional<Classification> match_zigzag_d(const FcElement& fc) {
    const int n = fc.graph().n();
    const int len = fc.length();
    if (len < 2 || (len - 2) % (n + 1) != 0) return std::nullopt;
    const int q = (len - 2) / (n + 1);
    if (q < 1) return std::nullopt;
    const int k = q / 2, h = q % 2;
    for (bool bullet_end : {true, false}) {
        if (fc == complete_zigzag_d(fc.graph_ptr(), bullet_end, k, h))
            return Classification{"CZ", {{"k", k}, {"h", h}, {"bullet_end", bullet_end ? 1 : 0}}};
    }
    return std::nullopt;
}

std::optional<Classification> match_zigzag_b(const FcElement& fc) {
    const int n = fc.graph().n();
    const int len = fc.length();
    for (int form : {1, 2}) {
        const int head = (form == 1) ? 2 : 1;
        for (int h : {0, 1}) {
            const int tail = (form == 1) ? h * n : h * (n + 1);
            const int body = len - head - tail;
            if (body < 0 || body % (2 * n + 1) != 0) continue;
            const int k = body / (2 * n + 1);
            if (k + h == 0) continue;
            if (fc == complete_zigzag_b(fc.graph_ptr(), form, k, h))
                return Classification{"CZ", {{"form", form}, {"k", k}, {"h", h}}};
        }
    }
    return std::nullopt;
}

// Candy pattern match directly on the CFNF layers.
std::optional<Classification> match_candy_d(const FcElement& fc) {
    const int n = fc.graph().n();
    if (n % 2 != 0) return std::nullopt;
    const auto& layers = fc.layers();
    const int m = static_cast<int>(layers.size()) - 1;
    if (m < 2 || m % 2 != 0) return std::nullopt;
    const auto base_even = odd_run(3, n - 1);
    const auto base_odd = odd_run(2, n);
    int x0 = -1, y0 = -1, prev_x = -1, prev_y = -1;
    for (int j = 0; j <= m; ++j) {
        if (j % 2 == 1) {
            if (layers[j] != base_odd) return std::nullopt;
            continue;
        }
        std::vector<int> rest;
        int x = -1, y = -1;
        for (int s : layers[j]) {
            if (s == 0 || s == 1)
                x = s;
            else if (s == n + 1 || s == n + 2)
                y = s;
            else
                rest.push_back(s);
        }
        if (x < 0 || y < 0 || rest != base_even) return std::nullopt;
        if (j == 0) {
            x0 = x;
            y0 = y;
        } else if (x == prev_x || y == prev_y) {
            return std::nullopt;
        }
        prev_x = x;
        prev_y = y;
    }
    return Classification{"Candy", {{"m", m}, {"x0", x0}, {"y0", y0}}};
}

std::optional<Classification> match_candy_b(const FcElement& fc) {
    const int n = fc.graph().n();
    if (n % 2 != 0) return std::nullopt;
    const auto& layers = fc.layers();
    const int m = static_cast<int>(layers.size()) - 1;
    if (m < 2 || m % 2 != 0) return std::nullopt;
    const auto base_even = odd_run(3, n + 1);
    const auto base_odd = odd_run(2, n);
    int x0 = -1, prev_x = -1;
    for (int j = 0; j <= m; ++j) {
        if (j % 2 == 1) {
            if (layers[j] != base_odd) return std::nullopt;
            continue;
        }
        std::vector<int> rest;
        int x = -1;
        for (int s : layers[j]) {
            if (s == 0 || s == 1)
                x = s;
            else
                rest.push_back(s);
        }
        if (x < 0 || rest != base_even) return std::nullopt;
        if (j == 0)
            x0 = x;
        else if (x == prev_x)
            return std::nullopt;
        prev_x = x;
    }
    return Classification{"Candy", {{"m", m}, {"x0", x0}}};
}

std::optional<Classification> match_left_candy_b(const FcElement& fc) {
    const int n = fc.graph().n();
    if (n % 2 != 1) return std::nullopt;
    const auto& layers = fc.layers();
    const int m = static_cast<int>(layers.size()) - 1;
    if (m < 2 || m % 2 != 0) return std::nullopt;
    const auto base_even = odd_run(3, n);
    const auto base_odd = odd_run(2, n + 1);
    int x0 = -1, prev_x = -1;
    for (int j = 0; j <= m; ++j) {
        if (j % 2 == 1) {
            if (layers[j] != base_odd) return std::nullopt;
            continue;
        }
        std::vector<int> rest;
        int x = -1;
        for (int s : layers[j]) {
            if (s == 0 || s == 1)
                x = s;
            else
                rest.push_back(s);
        }
        if (x < 0 || rest != base_even) return std::nullopt;
        if (j == 0)
            x0 = x;
        else if (x == prev_x)
            return std::nullopt;
        prev_x = x;
    }
    return Classification{"LeftCandy", {{"m", m}, {"x0", x0}}};
}

// CC_w: completely commutative, or s_n s_{n+1} v / s_{n+1} s_n v with v
// a product of commuting generators avoiding s_{n-1}, s_n, s_{n+1}.
std::optional<Classification> match_ccw_b(const FcElement& fc) {
    const auto& layers = fc.layers();
    if (layers.size() <= 1) return Classification{"CCw", {}};
    if (layers.size() != 2) return std::nullopt;
    const int n = fc.graph().n();
    for (int lead : {n, n + 1}) {
        const int second = (lead == n) ? n + 1 : n;
        if (layers[1] != std::vector<int>{second}) continue;
        bool ok = false;
        for (int s : layers[0])
            if (s == lead) ok = true;
        if (!ok) continue;
        for (int s : layers[0]) {
            if (s == lead) continue;
            if (s == n - 1 || s == n || s == n + 1) {
                ok = false;
                break;
            }
        }
        if (ok) return Classification{"CCw", {}};
    }
    return std::nullopt;
}

Classification pick_unique(const FcElement& fc,
                           std::vector<std::optional<Classification>> branches) {
    std::vector<Classification> hits;
    for (auto& b : branches)
        if (b) hits.push_back(std::move(*b));
    if (hits.size() != 1)
        throw DomainError("classification matched " + std::to_string(hits.size()) +
                          " families for an irreducible element of length " +
                          std::to_string(fc.length()));
    return hits.front();
}

}  // namespace

FcElement complete_zigzag_d(GraphPtr graph, bool bullet_end, int k, int h) {
    if (!graph || graph->family() != Family::AffineD)
        throw WrongFamilyError("complete_zigzag_d needs an AffineD graph");
    if (k < 0 || h < 0 || h > 1 || k + h == 0) throw DomainError("zigzag needs k>=0, h in {0,1}, k+h>0");
    auto w = zigzag_word_d(graph->n(), bullet_end, k, h);
    return cartier_foata(Word{std::move(graph), std::move(w)});
}

FcElement complete_zigzag_b(GraphPtr graph, int form, int k, int h) {
    if (!graph || graph->family() != Family::AffineB)
        throw WrongFamilyError("complete_zigzag_b needs an AffineB graph");
    if (form != 1 && form != 2) throw DomainError("zigzag form must be 1 or 2");
    if (k < 0 || h < 0 || h > 1 || k + h == 0) throw DomainError("zigzag needs k>=0, h in {0,1}, k+h>0");
    auto w = zigzag_word_b(graph->n(), form, k, h);
    return cartier_foata(Word{std::move(graph), std::move(w)});
}

FcElement candy_d(GraphPtr graph, int m, int x0, int y0) {
    if (!graph || graph->family() != Family::AffineD)
        throw WrongFamilyError("candy_d needs an AffineD graph");
    const int n = graph->n();
    if (n % 2 != 0) throw DomainError("candies exist only for even n");
    if (m < 2 || m % 2 != 0) throw DomainError("candy needs even m >= 2");
    if (x0 != 0 && x0 != 1) throw DomainError("x0 must be 0 or 1");
    if (y0 != n + 1 && y0 != n + 2) throw DomainError("y0 must be n+1 or n+2");
    const auto layers =
        candy_layers(m, odd_run(3, n - 1), odd_run(2, n), {{x0, 1 - x0}, {y0, 2 * n + 3 - y0}});
    return element_from_layers(std::move(graph), layers);
}

FcElement candy_b(GraphPtr graph, int m, int x0) {
    if (!graph || graph->family() != Family::AffineB)
        throw WrongFamilyError("candy_b needs an AffineB graph");
    const int n = graph->n();
    if (n % 2 != 0) throw DomainError("candies exist only for even n");
    if (m < 2 || m % 2 != 0) throw DomainError("candy needs even m >= 2");
    if (x0 != 0 && x0 != 1) throw DomainError("x0 must be 0 or 1");
    const auto layers = candy_layers(m, odd_run(3, n + 1), odd_run(2, n), {{x0, 1 - x0}});
    return element_from_layers(std::move(graph), layers);
}

FcElement left_candy_b(GraphPtr graph, int m, int x0) {
    if (!graph || graph->family() != Family::AffineB)
        throw WrongFamilyError("left_candy_b needs an AffineB graph");
    const int n = graph->n();
    if (n % 2 != 1) throw DomainError("left candies exist only for odd n");
    if (m < 2 || m % 2 != 0) throw DomainError("left candy needs even m >= 2");
    if (x0 != 0 && x0 != 1) throw DomainError("x0 must be 0 or 1");
    const auto layers = candy_layers(m, odd_run(3, n), odd_run(2, n + 1), {{x0, 1 - x0}});
    return element_from_layers(std::move(graph), layers);
}

bool is_complete_zigzag(const FcElement& fc) {
    switch (fc.graph().family()) {
        case Family::AffineD: return match_zigzag_d(fc).has_value();
        case Family::AffineB: return match_zigzag_b(fc).has_value();
        case Family::Generic: throw WrongFamilyError("zigzags need an affine family");
    }
    return false;
}

bool is_factor(const FcElement& u, const FcElement& z) {
    if (u.length() > z.length()) return false;
    std::set<std::vector<int>> seen;
    std::vector<FcElement> stack{z};
    seen.insert(z.key());
    while (!stack.empty()) {
        FcElement cur = std::move(stack.back());
        stack.pop_back();
        if (cur == u) return true;
        if (cur.length() <= u.length()) continue;
        for (int s : cur.left_descents()) {
            FcElement next = cur.strip_left(s);
            if (seen.insert(next.key()).second) stack.push_back(std::move(next));
        }
        for (int s : cur.right_descents()) {
            FcElement next = cur.inverse().strip_left(s).inverse();
            if (seen.insert(next.key()).second) stack.push_back(std::move(next));
        }
    }
    return false;
}

bool is_weak_zigzag(const FcElement& fc) {
    const Family fam = fc.graph().family();
    if (fam == Family::Generic) throw WrongFamilyError("weak zigzags need an affine family");
    if (fc.layers().size() <= 1) return false;  // CC, including the identity
    const int n = fc.graph().n();
    const int bound = fc.length() + 2 * (n + 1) + 2;
    for (int form = 1; form <= 2; ++form) {
        for (int h = 0; h <= 1; ++h) {
            for (int k = 0;; ++k) {
                if (k + h == 0) continue;
                FcElement z = (fam == Family::AffineD)
                                  ? complete_zigzag_d(fc.graph_ptr(), form == 1, k, h)
                                  : complete_zigzag_b(fc.graph_ptr(), form, k, h);
                if (z.length() > bound) break;
                if (z.length() >= fc.length() && is_factor(fc, z)) return true;
            }
        }
    }
    return false;
}

Classification classify_irreducible_d(const FcElement& fc) {
    require_family(fc, Family::AffineD, "classify_irreducible_d");
    if (!is_irreducible(fc, StarMode::Star))
        throw NotIrreducibleError("element is star reducible");
    if (fc.layers().size() <= 1) return Classification{"CC", {}};
    return pick_unique(fc, {match_zigzag_d(fc), match_candy_d(fc)});
}

Classification classify_irreducible_b(const FcElement& fc, StarMode mode) {
    require_family(fc, Family::AffineB, "classify_irreducible_b");
    if (!is_irreducible(fc, mode))
        throw NotIrreducibleError("element is reducible in the requested mode");
    if (mode == StarMode::Star) {
        if (fc.layers().size() <= 1) return Classification{"CC", {}};
        auto zz = match_zigzag_b(fc);
        if (zz) {
            // CZ_bullet is the zigzag with both descent sets equal to {0,1}
            const std::vector<int> fork{0, 1};
            if (fc.left_descents() == fork && fc.right_descents() == fork)
                zz->cls = "CZbullet";
            else
                zz.reset();
        }
        return pick_unique(fc, {std::move(zz), match_candy_b(fc)});
    }
    return pick_unique(
        fc, {match_ccw_b(fc), match_candy_b(fc), match_left_candy_b(fc), match_zigzag_b(fc)});
}

IrreducibleClassD irreducible_class_d(const FcElement& fc) {
    const auto c = classify_irreducible_d(fc);
    if (c.cls == "CC") return IrreducibleClassD::CC;
    if (c.cls == "CZ") return IrreducibleClassD::CZ;
    return IrreducibleClassD::Candy;
}

IrreducibleClassBStar irreducible_class_b_star(const FcElement& fc) {
    const auto c = classify_irreducible_b(fc, StarMode::Star);
    if (c.cls == "CC") return IrreducibleClassBStar::CC;
    if (c.cls == "CZbullet") return IrreducibleClassBStar::CZBullet;
    return IrreducibleClassBStar::Candy;
}

IrreducibleClassBWeak irreducible_class_b_weak(const FcElement& fc) {
    const auto c = classify_irreducible_b(fc, StarMode::WeakStar);
    if (c.cls == "CCw") return IrreducibleClassBWeak::CCw;
    if (c.cls == "Candy") return IrreducibleClassBWeak::Candy;
    if (c.cls == "LeftCandy") return IrreducibleClassBWeak::LeftCandy;
    return IrreducibleClassBWeak::CZ;
}

FcElement phi(const FcElement& fc) {
    require_family(fc, Family::AffineB, "phi");
    const int n = fc.graph().n();
    GraphPtr target = make_affine_d(n);
    const std::vector<int> w = fc.word();
    const int r = static_cast<int>(w.size());

    // heap closure of the word
    std::vector<std::vector<char>> below(r, std::vector<char>(r, 0));
    const CoxeterGraph& g = fc.graph();
    for (int j = 0; j < r; ++j)
        for (int i = j - 1; i >= 0; --i) {
            if (g.linked(w[i], w[j])) {
                below[i][j] = 1;
                continue;
            }
            for (int k = i + 1; k < j; ++k)
                if (below[i][k] && below[k][j]) {
                    below[i][j] = 1;
                    break;
                }
        }

    std::vector<int> chain;
    for (int i = 0; i < r; ++i)
        if (w[i] == n || w[i] == n + 1) chain.push_back(i);

    auto convex_triple = [&](std::size_t ci) {
        const int first = chain[ci], mid = chain[ci + 1], last = chain[ci + 2];
        for (int z = 0; z < r; ++z) {
            if (z == first || z == mid || z == last) continue;
            if (below[first][z] && below[z][last]) return false;
        }
        return true;
    };

    // Greedy leftmost selection of disjoint convex triples; overlapping
    // occurrences are never jointly realizable in one word.
    int kind = -1;  // leading label of the selected triples
    std::vector<std::array<int, 3>> selected;
    for (std::size_t ci = 0; chain.size() >= 3 && ci + 2 < chain.size();) {
        if (convex_triple(ci)) {
            if (kind < 0) kind = w[chain[ci]];
            if (w[chain[ci]] != kind)
                throw DomainError("phi: both braid factor kinds present, outside the FC domain");
            selected.push_back({chain[ci], chain[ci + 1], chain[ci + 2]});
            ci += 3;
        } else {
            ++ci;
        }
    }

    std::vector<int> image = w;
    if (kind == n + 1) {
        // s_{n+1} s_n s_{n+1}  ->  s_{n+1} s_n s_{n+2}
        for (const auto& tri : selected) image[tri[2]] = n + 2;
    } else if (kind == n) {
        // s_n s_{n+1} s_n  ->  s_n s_{n+1} s_{n+2} s_n: insert after the middle
        std::vector<int> mids;
        for (const auto& tri : selected) mids.push_back(tri[1]);
        std::sort(mids.rbegin(), mids.rend());
        for (int mid : mids) image.insert(image.begin() + mid + 1, n + 2);
    }
    return cartier_foata(Word{std::move(target), std::move(image)});
}

}  // namespace affinefc
