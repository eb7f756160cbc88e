#include "oramsey/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

constexpr std::size_t kMaxHeader = 256;

int parse_field(const std::string& token, const char* name) {
    const std::string prefix = std::string(name) + "=";
    if (token.rfind(prefix, 0) != 0)
        throw parse_error(std::string("header: expected ") + name + "=<int>, got '" + token + "'");
    int value = 0;
    const char* first = token.data() + prefix.size();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error(std::string(name) + ": not an integer in '" + token + "'");
    return value;
}

}  // namespace

void save_coloring(const OrderedColoring& c, std::ostream& out, bool mark_unverified) {
    out << "ordered-coloring v1 k=" << c.uniformity() << " n=" << c.vertex_count();
    if (mark_unverified) out << " unverified";
    out << '\n';
    const i64 bits = c.edge_count();
    const i64 bytes = (bits + 7) / 8;
    const auto words = c.words();
    for (i64 b = 0; b < bytes; ++b) {
        unsigned char v = 0;
        for (int p = 0; p < 8; ++p) {
            const i64 j = 8 * b + p;
            if (j >= bits) break;
            if ((words[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1)
                v |= static_cast<unsigned char>(1u << p);
        }
        out.put(static_cast<char>(v));
    }
    if (!out) throw std::runtime_error("save_coloring: write failed");
}

void save_coloring(const OrderedColoring& c, const std::filesystem::path& path,
                   bool mark_unverified) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_coloring: cannot open " + path.string());
    save_coloring(c, out, mark_unverified);
}

OrderedColoring load_coloring(std::istream& in, bool* unverified) {
    std::string header;
    char ch;
    while (in.get(ch)) {
        if (ch == '\n') break;
        header.push_back(ch);
        if (header.size() > kMaxHeader) throw parse_error("header: line too long");
    }
    if (!in && header.empty()) throw parse_error("header: empty input");

    std::istringstream tokens(header);
    std::string magic, version, ktok, ntok, extra;
    tokens >> magic >> version >> ktok >> ntok;
    if (magic != "ordered-coloring")
        throw parse_error("header: bad magic '" + magic + "'");
    if (version != "v1") throw parse_error("header: unsupported version '" + version + "'");
    const int k = parse_field(ktok, "k");
    const int n = parse_field(ntok, "n");
    bool is_unverified = false;
    if (tokens >> extra) {
        if (extra != "unverified")
            throw parse_error("header: unexpected token '" + extra + "'");
        is_unverified = true;
        if (tokens >> extra) throw parse_error("header: trailing tokens");
    }
    if (k < 2) throw parse_error("k: uniformity must be >= 2");
    if (n < 0) throw parse_error("n: vertex count must be >= 0");
    if (unverified) *unverified = is_unverified;

    OrderedColoring c(k, n);
    const i64 bits = c.edge_count();
    const i64 bytes = (bits + 7) / 8;
    std::vector<char> payload(static_cast<std::size_t>(bytes));
    in.read(payload.data(), bytes);
    if (in.gcount() != bytes)
        throw parse_error("payload: expected " + std::to_string(bytes) + " bytes (" +
                          std::to_string(bits) + " bits), got " + std::to_string(in.gcount()));
    if (in.get(ch)) throw parse_error("payload: trailing data after declared length");

    auto words = c.mutable_words();
    for (i64 b = 0; b < bytes; ++b) {
        const auto v = static_cast<unsigned char>(payload[static_cast<std::size_t>(b)]);
        for (int p = 0; p < 8; ++p) {
            const i64 j = 8 * b + p;
            if ((v >> p) & 1) {
                if (j >= bits) throw parse_error("padding: nonzero pad bit " + std::to_string(j));
                words[static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
            }
        }
    }
    return c;
}

OrderedColoring load_coloring(const std::filesystem::path& path, bool* unverified) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("file: cannot open " + path.string());
    return load_coloring(in, unverified);
}

}  // namespace oramsey
