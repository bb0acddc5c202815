#include "alphaspectra/families.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace alphaspectra {

Graph make_basic(BasicKind kind, int n) {
    std::vector<Edge> es;
    switch (kind) {
        case BasicKind::Path:
            if (n < 1) throw std::invalid_argument("path: n >= 1 required");
            for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
            return Graph(n, es);
        case BasicKind::Cycle:
            if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
            for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
            return Graph(n, es);
        case BasicKind::Star:
            if (n < 1) throw std::invalid_argument("star: n >= 1 required");
            for (int i = 1; i < n; ++i) es.emplace_back(0, i);
            return Graph(n, es);
        case BasicKind::Complete:
            if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
            return Graph(n, es);
    }
    throw std::invalid_argument("make_basic: unknown kind");
}

namespace {

Graph spider(std::initializer_list<int> legs) {
    std::vector<Edge> es;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, es);
}

Graph double_fork(int n) {
    // central path 0..t-1, two leaves at each end; t = n-4
    int t = n - 4;
    std::vector<Edge> es;
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, t);
    es.emplace_back(0, t + 1);
    es.emplace_back(t - 1, t + 2);
    es.emplace_back(t - 1, t + 3);
    return Graph(n, es);
}

}  // namespace

Graph make_smith(SmithId id, int size) {
    switch (id) {
        case SmithId::H1: {
            if (size == 0) size = 4;
            if (size < 4) throw std::invalid_argument("smith H1: size >= 4 required");
            return spider({1, 1, size - 3});
        }
        case SmithId::H2: return spider({1, 2, 2});
        case SmithId::H3: return spider({1, 2, 3});
        case SmithId::H4: return spider({1, 2, 4});
        case SmithId::H5: {
            if (size == 0) size = 5;
            if (size < 5) throw std::invalid_argument("smith H5: size >= 5 required");
            return double_fork(size);
        }
        case SmithId::H6: return spider({2, 2, 2});
        case SmithId::H7: return spider({1, 3, 3});
        case SmithId::H8: return spider({1, 2, 5});
    }
    throw std::invalid_argument("make_smith: unknown id");
}

namespace {

// Appends a pendant path of `len` vertices at `anchor`; records the role
// labels outside-in (leaf first).
void append_path(std::vector<Edge>& es, int& next, int anchor, int len, std::vector<int>& roles) {
    int prev = anchor;
    for (int i = 0; i < len; ++i) {
        es.emplace_back(prev, next);
        prev = next++;
    }
    roles.clear();
    for (int i = 0; i < len; ++i) roles.push_back(next - 1 - i);
}

}  // namespace

PendantPathGraph make_gpsq(const FamilySpec& core, int p, int s, int q) {
    if (core.kind != FamilySpec::Kind::Cycle && core.kind != FamilySpec::Kind::Complete)
        throw std::invalid_argument("make_gpsq: core must be a cycle or a complete graph");
    int c = core.n;
    if (c < 3) throw std::invalid_argument("make_gpsq: core order >= 3 required");
    if (p < 1 || q < 0 || s < 0) throw std::invalid_argument("make_gpsq: need p >= 1, q >= 0, s >= 0");

    std::vector<Edge> es;
    if (core.kind == FamilySpec::Kind::Cycle) {
        for (int i = 0; i < c; ++i) es.emplace_back(i, (i + 1) % c);
    } else {
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) es.emplace_back(i, j);
    }

    PendantPathGraph out;
    out.p = p;
    out.s = s;
    out.q = q;
    int next = c;
    if (s == 0) {
        out.u = out.v = 0;
        out.w_path = {0};
    } else {
        out.u = 0;
        out.v = 1;
        out.w_path = {1};
        if (s >= 2) {
            // replace the core edge uv by a path with s-1 interior vertices
            std::erase(es, Edge{0, 1});
            int prev = 1;
            for (int i = 0; i < s - 1; ++i) {
                es.emplace_back(prev, next);
                out.w_path.push_back(next);
                prev = next++;
            }
            es.emplace_back(prev, 0);
        }
        out.w_path.push_back(0);
    }
    append_path(es, next, out.u, p, out.u_path);
    append_path(es, next, out.v, q, out.v_path);
    out.graph = Graph(next, es);
    out.core_spec = core;
    return out;
}

PendantPathGraph make_gpsq_host(const Graph& host, int u, int v, int p, int q) {
    if (host.degree(u) < 2 || host.degree(v) < 2)
        throw std::invalid_argument("make_gpsq_host: d(u), d(v) >= 2 required in the host");
    if (p < 1 || q < 0) throw std::invalid_argument("make_gpsq_host: need p >= 1, q >= 0");

    PendantPathGraph out;
    out.p = p;
    out.q = q;
    out.u = u;
    out.v = v;
    if (u == v) {
        out.s = 0;
        out.w_path = {v};
    } else {
        // shortest v..u path whose interior vertices have host degree 2
        int n = host.n();
        std::vector<int> parent(n, -1);
        std::deque<int> queue{v};
        std::vector<char> seen(n, 0);
        seen[v] = 1;
        while (!queue.empty() && !seen[u]) {
            int x = queue.front();
            queue.pop_front();
            if (x != v && host.degree(x) != 2) continue;  // cannot pass through
            for (int w : host.neighbors(x))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
        }
        if (!seen[u])
            throw std::invalid_argument(
                "make_gpsq_host: no internal path of degree-2 vertices joins u and v");
        for (int x = u; x != -1; x = parent[x]) out.w_path.push_back(x);
        std::reverse(out.w_path.begin(), out.w_path.end());  // w_0 = v .. w_s = u
        out.s = static_cast<int>(out.w_path.size()) - 1;
    }

    std::vector<Edge> es = host.edges();
    int next = host.n();
    append_path(es, next, u, p, out.u_path);
    append_path(es, next, v, q, out.v_path);
    out.graph = Graph(next, es);
    return out;
}

Graph make_gnk(int n, int k) {
    if (k < 0 || n - k < 2) throw std::invalid_argument("make_gnk: need k >= 0 and n - k >= 2");
    int c = n - k;
    std::vector<Edge> es;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) es.emplace_back(i, j);
    int next = c;
    for (int i = 0; i < c; ++i) {
        int len = k / c + (i < k % c ? 1 : 0);
        int prev = i;
        for (int step = 0; step < len; ++step) {
            es.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(n, es);
}

Graph make_ank(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("make_ank: need n >= 2k >= 2");
    std::vector<Edge> es;
    for (int i = 1; i <= n - k; ++i) es.emplace_back(0, i);
    for (int i = 1; i <= k - 1; ++i) es.emplace_back(i, n - k + i);
    return Graph(n, es);
}

// ---------------------------------------------------------------------------
// FamilySpec text form

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("family spec: " + msg, pos); }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(std::string_view w) {
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    int integer() {
        std::size_t start = pos;
        long value = 0;
        while (!done() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("integer too large");
            ++pos;
        }
        if (pos == start) fail("expected an integer");
        return static_cast<int>(value);
    }
    int keyed_integer(std::string_view key) {
        if (!eat_word(key)) fail("expected '" + std::string(key) + "'");
        expect('=');
        return integer();
    }
};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    Cursor c{text};
    FamilySpec spec;
    if (c.eat_word("path")) {
        spec.kind = Kind::Path;
    } else if (c.eat_word("cycle")) {
        spec.kind = Kind::Cycle;
    } else if (c.eat_word("star")) {
        spec.kind = Kind::Star;
    } else if (c.eat_word("complete")) {
        spec.kind = Kind::Complete;
    } else if (c.eat_word("smith")) {
        spec.kind = Kind::Smith;
    } else if (c.eat_word("gnk")) {
        spec.kind = Kind::Gnk;
    } else if (c.eat_word("ank")) {
        spec.kind = Kind::Ank;
    } else if (c.eat_word("gpsq")) {
        spec.kind = Kind::Gpsq;
    } else {
        c.fail("unknown family kind");
    }
    c.expect(':');
    switch (spec.kind) {
        case Kind::Path:
        case Kind::Cycle:
        case Kind::Star:
        case Kind::Complete:
            spec.n = c.integer();
            break;
        case Kind::Gnk:
        case Kind::Ank:
            spec.n = c.integer();
            c.expect(',');
            spec.k = c.integer();
            break;
        case Kind::Smith: {
            if (!c.eat('H')) c.fail("expected Smith id H1..H8");
            int id = c.integer();
            if (id < 1 || id > 8) c.fail("Smith id out of range H1..H8");
            spec.smith = static_cast<SmithId>(id - 1);
            if (c.eat(',')) spec.smith_size = c.integer();
            break;
        }
        case Kind::Gpsq: {
            if (c.eat_word("cycle"))
                spec.core = BasicKind::Cycle;
            else if (c.eat_word("complete"))
                spec.core = BasicKind::Complete;
            else
                c.fail("expected core 'cycle<N>' or 'complete<N>'");
            spec.core_n = c.integer();
            c.expect(',');
            spec.p = c.keyed_integer("p");
            c.expect(',');
            spec.s = c.keyed_integer("s");
            c.expect(',');
            spec.q = c.keyed_integer("q");
            break;
        }
    }
    if (!c.done()) c.fail("trailing characters");
    return spec;
}

std::string FamilySpec::str() const {
    switch (kind) {
        case Kind::Path: return "path:" + std::to_string(n);
        case Kind::Cycle: return "cycle:" + std::to_string(n);
        case Kind::Star: return "star:" + std::to_string(n);
        case Kind::Complete: return "complete:" + std::to_string(n);
        case Kind::Gnk: return "gnk:" + std::to_string(n) + "," + std::to_string(k);
        case Kind::Ank: return "ank:" + std::to_string(n) + "," + std::to_string(k);
        case Kind::Smith: {
            std::string out = "smith:H" + std::to_string(static_cast<int>(smith) + 1);
            if (smith_size != 0) out += "," + std::to_string(smith_size);
            return out;
        }
        case Kind::Gpsq: {
            std::string corename = core == BasicKind::Cycle ? "cycle" : "complete";
            return "gpsq:" + corename + std::to_string(core_n) + ",p=" + std::to_string(p) +
                   ",s=" + std::to_string(s) + ",q=" + std::to_string(q);
        }
    }
    return {};
}

Graph FamilySpec::build() const {
    switch (kind) {
        case Kind::Path: return make_basic(BasicKind::Path, n);
        case Kind::Cycle: return make_basic(BasicKind::Cycle, n);
        case Kind::Star: return make_basic(BasicKind::Star, n);
        case Kind::Complete: return make_basic(BasicKind::Complete, n);
        case Kind::Smith: return make_smith(smith, smith_size);
        case Kind::Gnk: return make_gnk(n, k);
        case Kind::Ank: return make_ank(n, k);
        case Kind::Gpsq: {
            FamilySpec corespec;
            corespec.kind = core == BasicKind::Cycle ? Kind::Cycle : Kind::Complete;
            corespec.n = core_n;
            return make_gpsq(corespec, p, s, q).graph;
        }
    }
    throw std::invalid_argument("FamilySpec: unknown kind");
}

}  // namespace alphaspectra
