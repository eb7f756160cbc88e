#include "oramsey/pattern.hpp"

#include <charconv>
#include <stdexcept>

namespace oramsey {

namespace {

void check(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("pattern: ") + what);
}

void validate(const PatternSpec& p) {
    if (const auto* pp = std::get_if<PathPower>(&p)) {
        check(pp->l >= 1, "path power requires l >= 1");
        check(pp->s >= 1, "path power requires s >= 1");
    } else if (const auto* tp = std::get_if<TightPath>(&p)) {
        check(tp->k >= 2, "tight path requires k >= 2");
        check(tp->s >= 1, "tight path requires s >= 1");
    } else if (const auto* br = std::get_if<Broom>(&p)) {
        check(br->k >= 2, "broom requires k >= 2");
        check(br->a >= br->k - 1, "broom requires a >= k-1");
        check(br->m >= 0, "broom requires m >= 0");
    } else {
        const auto& cl = std::get<Clique>(p);
        check(cl.k >= 2, "clique requires k >= 2");
        check(cl.s >= 1, "clique requires s >= 1");
    }
}

int parse_int(std::string_view s) {
    int value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("pattern: bad integer '" + std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

int pattern_uniformity(const PatternSpec& p) {
    if (std::holds_alternative<PathPower>(p)) return 2;
    if (const auto* tp = std::get_if<TightPath>(&p)) return tp->k;
    if (const auto* br = std::get_if<Broom>(&p)) return br->k;
    return std::get<Clique>(p).k;
}

int pattern_vertex_count(const PatternSpec& p) {
    if (const auto* pp = std::get_if<PathPower>(&p)) return pp->s;
    if (const auto* tp = std::get_if<TightPath>(&p)) return tp->s;
    if (const auto* br = std::get_if<Broom>(&p)) return br->a + br->m;
    return std::get<Clique>(p).s;
}

std::vector<std::vector<int>> pattern_edges(const PatternSpec& p) {
    validate(p);
    std::vector<std::vector<int>> edges;
    if (const auto* pp = std::get_if<PathPower>(&p)) {
        for (int i = 0; i < pp->s; ++i)
            for (int j = i + 1; j < pp->s && j - i <= pp->l; ++j)
                edges.push_back({i, j});
    } else if (const auto* tp = std::get_if<TightPath>(&p)) {
        for (int j = 0; j + tp->k <= tp->s; ++j) {
            std::vector<int> e(static_cast<std::size_t>(tp->k));
            for (int i = 0; i < tp->k; ++i) e[static_cast<std::size_t>(i)] = j + i;
            edges.push_back(std::move(e));
        }
    } else if (const auto* br = std::get_if<Broom>(&p)) {
        for (int j = 0; j + br->k <= br->a; ++j) {
            std::vector<int> e(static_cast<std::size_t>(br->k));
            for (int i = 0; i < br->k; ++i) e[static_cast<std::size_t>(i)] = j + i;
            edges.push_back(std::move(e));
        }
        for (int t = 0; t < br->m; ++t) {
            std::vector<int> e;
            for (int i = br->a - br->k + 1; i < br->a; ++i) e.push_back(i);
            e.push_back(br->a + t);
            edges.push_back(std::move(e));
        }
    } else {
        const auto& cl = std::get<Clique>(p);
        if (cl.s >= cl.k) {
            std::vector<int> e(static_cast<std::size_t>(cl.k));
            for (int i = 0; i < cl.k; ++i) e[static_cast<std::size_t>(i)] = i;
            while (true) {
                edges.push_back(e);
                // next colex k-subset of {0..s-1}
                int i = 0;
                for (; i < cl.k; ++i) {
                    const int limit = (i + 1 < cl.k) ? e[static_cast<std::size_t>(i) + 1] : cl.s;
                    if (e[static_cast<std::size_t>(i)] + 1 < limit) break;
                }
                if (i == cl.k) break;
                ++e[static_cast<std::size_t>(i)];
                for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] = j;
            }
        }
    }
    return edges;
}

PatternSpec parse_pattern(std::string_view token) {
    const auto parts = split(token, ':');
    PatternSpec p;
    if (parts[0] == "path" && parts.size() == 3)
        p = PathPower{parse_int(parts[1]), parse_int(parts[2])};
    else if (parts[0] == "tight" && parts.size() == 3)
        p = TightPath{parse_int(parts[1]), parse_int(parts[2])};
    else if (parts[0] == "broom" && parts.size() == 4)
        p = Broom{parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
    else if (parts[0] == "clique" && parts.size() == 3)
        p = Clique{parse_int(parts[1]), parse_int(parts[2])};
    else
        throw std::invalid_argument("pattern: cannot parse '" + std::string(token) + "'");
    validate(p);
    return p;
}

std::string format_pattern(const PatternSpec& p) {
    if (const auto* pp = std::get_if<PathPower>(&p))
        return "path:" + std::to_string(pp->l) + ":" + std::to_string(pp->s);
    if (const auto* tp = std::get_if<TightPath>(&p))
        return "tight:" + std::to_string(tp->k) + ":" + std::to_string(tp->s);
    if (const auto* br = std::get_if<Broom>(&p))
        return "broom:" + std::to_string(br->k) + ":" + std::to_string(br->a) + ":" +
               std::to_string(br->m);
    const auto& cl = std::get<Clique>(p);
    return "clique:" + std::to_string(cl.k) + ":" + std::to_string(cl.s);
}

}  // namespace oramsey
