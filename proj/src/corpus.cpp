#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace p5g {

namespace {

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId value) {
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end())
        throw Error(ErrorCode::Internal, "triangulation bookkeeping lost an edge");
    rot.insert(it + 1, value);
}

// Random planar triangulation: start from K3 and repeatedly split a random
// triangular face with a new vertex joined to its three corners. Faces are
// kept as directed walks (a,b,c) consistent with the tracing convention.
std::vector<std::vector<VertexId>> build_triangulation(std::uint32_t n, SplitMix64& rng) {
    std::vector<std::vector<VertexId>> rot = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    for (VertexId w = 3; w < n; ++w) {
        const auto idx = static_cast<std::size_t>(rng.below(faces.size()));
        const auto [a, b, c] = faces[idx];
        insert_after(rot[b], a, w);
        insert_after(rot[c], b, w);
        insert_after(rot[a], c, w);
        rot.push_back({b, a, c});
        faces[idx] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return rot;
}

// Replaces every edge uv by u-m-v. Keeps the embedding: m takes uv's slot in
// both rotations.
std::vector<std::vector<VertexId>> subdivide_all(std::vector<std::vector<VertexId>> rot) {
    const auto n0 = static_cast<VertexId>(rot.size());
    std::unordered_map<std::uint64_t, VertexId> mid;
    VertexId next = n0;
    auto edge_key = [](VertexId u, VertexId v) {
        auto [lo, hi] = std::minmax(u, v);
        return (static_cast<std::uint64_t>(lo) << 32) | hi;
    };
    for (VertexId u = 0; u < n0; ++u)
        for (VertexId v : rot[u])
            if (u < v)
                mid.emplace(edge_key(u, v), next), ++next;

    std::vector<std::vector<VertexId>> out(next);
    for (VertexId u = 0; u < n0; ++u) {
        out[u].reserve(rot[u].size());
        for (VertexId v : rot[u]) {
            const VertexId m = mid.at(edge_key(u, v));
            out[u].push_back(m);
            if (u < v)
                out[m] = {u, v};
        }
    }
    return out;
}

} // namespace

RotationGraph gen_cycle(std::uint32_t n) {
    if (n < 3)
        throw Error(ErrorCode::BadParameter, "cycle needs n >= 3");
    std::vector<std::vector<VertexId>> rot(n);
    for (VertexId i = 0; i < n; ++i)
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return RotationGraph::from_rotations(std::move(rot));
}

RotationGraph gen_spider(std::uint32_t center_degree, std::uint32_t leg_length) {
    if (center_degree < 1 || leg_length < 1)
        throw Error(ErrorCode::BadParameter, "spider needs positive degree and leg length");
    const std::uint64_t total = 1 + std::uint64_t(center_degree) * leg_length;
    std::vector<std::vector<VertexId>> rot(total);
    for (std::uint32_t leg = 0; leg < center_degree; ++leg) {
        const VertexId first = 1 + leg * leg_length;
        rot[0].push_back(first);
        for (std::uint32_t j = 0; j < leg_length; ++j) {
            const VertexId cur = first + j;
            const VertexId prev = j == 0 ? 0 : cur - 1;
            rot[cur].push_back(prev);
            if (j + 1 < leg_length)
                rot[cur].push_back(cur + 1);
        }
    }
    return RotationGraph::from_rotations(std::move(rot));
}

RotationGraph gen_dodecahedron() {
    std::vector<std::vector<VertexId>> rot(20);
    for (VertexId i = 0; i < 5; ++i) {
        const VertexId j = (i + 1) % 5, k = (i + 4) % 5;
        rot[i] = {j, 5 + i, k};
        rot[5 + i] = {i, 10 + i, 10 + k};
        rot[10 + i] = {5 + i, 5 + j, 15 + i};
        rot[15 + i] = {10 + i, 15 + j, 15 + k};
    }
    return RotationGraph::from_rotations(std::move(rot));
}

RotationGraph gen_subdivided_triangulation(std::uint32_t n, std::uint64_t seed) {
    if (n < 3)
        throw Error(ErrorCode::BadParameter, "subdivided triangulation needs n >= 3");
    SplitMix64 rng(seed);
    return RotationGraph::from_rotations(subdivide_all(build_triangulation(n, rng)));
}

RotationGraph gen_girth5_random(std::uint32_t n, std::uint32_t delta_target, std::uint64_t seed) {
    if (n < 5)
        throw Error(ErrorCode::BadParameter, "girth-5 generator needs n >= 5");
    if (delta_target < 1)
        throw Error(ErrorCode::BadParameter, "delta target must be positive");
    SplitMix64 rng(seed);
    auto rot = subdivide_all(build_triangulation(n, rng));

    VertexId hub = 0;
    for (VertexId v = 1; v < rot.size(); ++v)
        if (rot[v].size() > rot[hub].size())
            hub = v;

    // Pendant 2-paths keep girth unbounded on the new part and never create
    // adjacent 2-vertices at the hub's legs.
    while (rot[hub].size() < delta_target) {
        const auto a = static_cast<VertexId>(rot.size());
        rot[hub].push_back(a);
        rot.push_back({hub, a + 1});
        rot.push_back({a});
    }
    return RotationGraph::from_rotations(std::move(rot));
}

GenSpec GenSpec::parse(const std::string& line, std::size_t line_no) {
    std::istringstream in(line);
    GenSpec spec;
    if (!(in >> spec.family))
        throw ParseError(line_no, "empty spec");
    static const std::array<std::string, 5> families = {
        "cycle", "spider", "dodecahedron", "subdivided-triangulation", "grafted"};
    if (std::find(families.begin(), families.end(), spec.family) == families.end())
        throw ParseError(line_no, "unknown family '" + spec.family + "'");

    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        std::uint64_t parsed = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || p != value.data() + value.size())
            throw ParseError(line_no, "bad number '" + value + "' for key '" + key + "'");
        if (key == "n")
            spec.n = static_cast<std::uint32_t>(parsed);
        else if (key == "delta")
            spec.delta = static_cast<std::uint32_t>(parsed);
        else if (key == "legs")
            spec.legs = static_cast<std::uint32_t>(parsed);
        else if (key == "seed")
            spec.seed = parsed;
        else
            throw ParseError(line_no, "unknown key '" + key + "'");
    }
    return spec;
}

GenSpec GenSpec::resolved(std::uint64_t default_seed) const {
    GenSpec out = *this;
    if (out.family == "spider" && !out.legs)
        out.legs = 1;
    const bool seeded = out.family == "subdivided-triangulation" || out.family == "grafted";
    if (seeded && !out.seed)
        out.seed = default_seed;
    return out;
}

std::string GenSpec::canonical() const {
    std::string s = family;
    if (n)
        s += " n=" + std::to_string(*n);
    if (delta)
        s += " delta=" + std::to_string(*delta);
    if (legs)
        s += " legs=" + std::to_string(*legs);
    if (seed)
        s += " seed=" + std::to_string(*seed);
    return s;
}

RotationGraph generate(const GenSpec& raw, std::uint64_t default_seed) {
    const GenSpec spec = raw.resolved(default_seed);
    auto need = [&](const std::optional<std::uint32_t>& field, const char* name) {
        if (!field)
            throw Error(ErrorCode::BadParameter,
                        spec.family + " spec is missing '" + name + "'");
        return *field;
    };
    if (spec.family == "cycle")
        return gen_cycle(need(spec.n, "n"));
    if (spec.family == "spider")
        return gen_spider(need(spec.delta, "delta"), need(spec.legs, "legs"));
    if (spec.family == "dodecahedron")
        return gen_dodecahedron();
    if (spec.family == "subdivided-triangulation")
        return gen_subdivided_triangulation(need(spec.n, "n"), *spec.seed);
    if (spec.family == "grafted")
        return gen_girth5_random(need(spec.n, "n"), need(spec.delta, "delta"), *spec.seed);
    throw Error(ErrorCode::BadParameter, "unknown family '" + spec.family + "'");
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string spec_hash(const GenSpec& spec, std::uint64_t default_seed) {
    const auto h = fnv1a64(spec.resolved(default_seed).canonical());
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i)
        out[15 - i] = digits[(h >> (4 * i)) & 0xf];
    return out;
}

RotationGraph read_p5g(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    std::uint64_t n = 0, m = 0;
    bool have_header = false;
    std::size_t header_line = 0;
    std::vector<std::vector<VertexId>> rot;
    std::vector<char> seen;
    std::uint64_t rot_lines = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first))
            continue;

        if (!have_header) {
            if (first != "p5g")
                throw ParseError(line_no, "expected 'p5g <n> <m>' header");
            if (!(tokens >> n >> m))
                throw ParseError(line_no, "malformed header");
            if (n > 100000000 || m > 300000000)
                throw ParseError(line_no, "implausible vertex or edge count");
            std::string extra;
            if (tokens >> extra)
                throw ParseError(line_no, "trailing content after header");
            have_header = true;
            header_line = line_no;
            rot.resize(n);
            seen.assign(n, 0);
            continue;
        }

        if (first != "rot")
            throw ParseError(line_no, "expected 'rot <v>: ...' line");
        if (rot_lines == n)
            throw ParseError(line_no, "more rotation lines than vertices");
        std::string vtok;
        if (!(tokens >> vtok) || vtok.size() < 2 || vtok.back() != ':')
            throw ParseError(line_no, "expected 'rot <v>:' with a colon");
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(vtok.data(), vtok.data() + vtok.size() - 1, v);
        if (ec != std::errc{} || p != vtok.data() + vtok.size() - 1)
            throw ParseError(line_no, "bad vertex id '" + vtok + "'");
        if (v >= n)
            throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range");
        if (seen[v])
            throw ParseError(line_no, "duplicate rotation for vertex " + std::to_string(v));
        seen[v] = 1;
        ++rot_lines;

        std::string utok;
        while (tokens >> utok) {
            std::uint64_t u = 0;
            auto [q, ec2] = std::from_chars(utok.data(), utok.data() + utok.size(), u);
            if (ec2 != std::errc{} || q != utok.data() + utok.size())
                throw ParseError(line_no, "bad neighbour id '" + utok + "'");
            rot[v].push_back(static_cast<VertexId>(u));
        }
    }

    if (!have_header)
        throw ParseError(line_no + 1, "missing 'p5g <n> <m>' header");
    if (rot_lines != n)
        throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rotation lines, got " +
                                          std::to_string(rot_lines));

    RotationGraph g = RotationGraph::from_rotations(std::move(rot));
    if (g.edge_count() != m)
        throw ParseError(header_line, "header claims " + std::to_string(m) + " edges, rotations give " +
                                          std::to_string(g.edge_count()));
    return g;
}

std::string write_p5g(const RotationGraph& g) {
    std::string out = "p5g " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "rot " + std::to_string(v) + ":";
        for (VertexId u : g.rotation(v))
            out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

std::vector<GenSpec> read_manifest(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<GenSpec> specs;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        specs.push_back(GenSpec::parse(line, line_no));
    }
    return specs;
}

} // namespace p5g
