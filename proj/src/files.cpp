#include "bhsd/files.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bhsd {

namespace {

std::map<std::string, std::string> tokenize(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("recipe line: expected key=value, got '" + tok + "'");
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            throw std::invalid_argument("recipe line: duplicate key '" + tok.substr(0, eq) + "'");
    }
    return kv;
}

long long to_ll(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw std::invalid_argument("recipe line: bad integer for " + key + ": '" + v + "'");
    }
}

}  // namespace

RecipeRecord parse_recipe_line(const std::string& line) {
    auto kv = tokenize(line);
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto require = [&](const char* key) {
        auto v = take(key);
        if (!v) throw std::invalid_argument(std::string("recipe line: missing ") + key);
        return *v;
    };

    RecipeRecord rec;
    rec.id = require("id");
    rec.recipe.ring = ring_from_name(require("ring"));
    rec.recipe.variant = variant_from_name(require("variant"));
    if (auto l = take("lambda")) {
        if (l->size() != 1)
            throw std::invalid_argument("recipe line: lambda must be a single digit");
        rec.recipe.lambda = hex_decode((*l)[0], rec.recipe.ring);
    } else {
        rec.recipe.lambda = ring_one(rec.recipe.ring);
    }
    rec.recipe.r_a = vec_from_string(rec.recipe.ring, require("rA"));
    rec.recipe.r_b = vec_from_string(rec.recipe.ring, require("rB"));
    rec.recipe.r_c = vec_from_string(rec.recipe.ring, require("rC"));
    rec.recipe.r_d = vec_from_string(rec.recipe.ring, require("rD"));

    const Ring ext_ring = rec.recipe.ring == Ring::F4U ? Ring::F2U : rec.recipe.ring;
    if (auto c = take("ext_c")) {
        Vec cv = vec_from_string(ext_ring, *c);
        if (cv.size() != 1)
            throw std::invalid_argument("recipe line: ext_c must be a single symbol");
        rec.ext_c = cv.at(0);
    }
    if (auto x = take("ext_X")) rec.ext_x = vec_from_string(ext_ring, *x);
    if (rec.ext_c.has_value() != rec.ext_x.has_value())
        throw std::invalid_argument("recipe line: ext_c and ext_X must come together");

    if (auto x = take("nb_x")) rec.nb_x = *x;
    if (auto lc = take("low_confidence")) rec.low_confidence = (*lc == "1" || *lc == "true");
    if (auto a = take("aut")) rec.aut = *a;

    if (auto v = take("expect_d")) rec.expect.d = int(to_ll("expect_d", *v));
    if (auto v = take("expect_family")) rec.expect.family = family_from_name(*v);
    if (auto v = take("expect_beta")) rec.expect.beta = to_ll("expect_beta", *v);
    if (auto v = take("expect_gamma")) rec.expect.gamma = to_ll("expect_gamma", *v);
    if (auto v = take("expect_alpha")) rec.expect.alpha = to_ll("expect_alpha", *v);
    if (auto v = take("expect_a16")) rec.expect.a16 = to_ll("expect_a16", *v);
    if (auto v = take("expect_a20")) rec.expect.a20 = to_ll("expect_a20", *v);
    if (auto v = take("expect_i16")) rec.expect.i16 = uint64_t(to_ll("expect_i16", *v));
    if (auto v = take("expect_type")) {
        if (*v == "I")
            rec.expect.type_two = false;
        else if (*v == "II")
            rec.expect.type_two = true;
        else
            throw std::invalid_argument("recipe line: expect_type must be I or II");
    }

    if (!kv.empty())
        throw std::invalid_argument("recipe line: unknown key '" + kv.begin()->first + "'");
    return rec;
}

std::vector<RecipeRecord> parse_recipe_stream(std::istream& in) {
    std::vector<RecipeRecord> recs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            recs.push_back(parse_recipe_line(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return recs;
}

std::vector<RecipeRecord> load_recipe_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open recipe file: " + path);
    try {
        return parse_recipe_stream(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string serialize_record(const RecipeRecord& rec) {
    std::ostringstream out;
    out << "id=" << rec.id << " ring=" << ring_name(rec.recipe.ring)
        << " variant=" << variant_name(rec.recipe.variant);
    if (rec.recipe.lambda.bits != 1)
        out << " lambda=" << hex_encode(rec.recipe.lambda);
    out << " rA=" << vec_to_string(rec.recipe.r_a) << " rB=" << vec_to_string(rec.recipe.r_b)
        << " rC=" << vec_to_string(rec.recipe.r_c) << " rD=" << vec_to_string(rec.recipe.r_d);
    if (rec.ext_c) {
        Vec cv(rec.ext_c->ring, 1);
        cv.set(0, *rec.ext_c);
        out << " ext_c=" << vec_to_string(cv) << " ext_X=" << vec_to_string(*rec.ext_x);
    }
    if (rec.nb_x) out << " nb_x=" << *rec.nb_x;
    if (rec.low_confidence) out << " low_confidence=1";
    if (!rec.aut.empty()) out << " aut=" << rec.aut;
    if (rec.expect.d) out << " expect_d=" << *rec.expect.d;
    if (rec.expect.family) out << " expect_family=" << family_name(*rec.expect.family);
    if (rec.expect.beta) out << " expect_beta=" << *rec.expect.beta;
    if (rec.expect.gamma) out << " expect_gamma=" << *rec.expect.gamma;
    if (rec.expect.alpha) out << " expect_alpha=" << *rec.expect.alpha;
    if (rec.expect.a16) out << " expect_a16=" << *rec.expect.a16;
    if (rec.expect.a20) out << " expect_a20=" << *rec.expect.a20;
    if (rec.expect.i16) out << " expect_i16=" << *rec.expect.i16;
    if (rec.expect.type_two) out << " expect_type=" << (*rec.expect.type_two ? "II" : "I");
    return out.str();
}

std::string hex_pack_row(const uint64_t* words, int nbits) {
    const int digits = (nbits + 3) / 4;
    std::string s(digits, '0');
    for (int d = 0; d < digits; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            const int j = 4 * d + b;
            if (j < nbits && ((words[j >> 6] >> (j & 63)) & 1)) v |= 8 >> b;
        }
        s[d] = v < 10 ? char('0' + v) : char('A' + v - 10);
    }
    return s;
}

std::vector<uint64_t> hex_unpack_row(const std::string& hex, int nbits) {
    if (int(hex.size()) != (nbits + 3) / 4)
        throw std::invalid_argument("hex row has the wrong length");
    std::vector<uint64_t> words((nbits + 63) / 64, 0);
    for (int d = 0; d < int(hex.size()); ++d) {
        const char c = hex[d];
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            throw std::invalid_argument(std::string("bad hex digit '") + c + "' in generator row");
        for (int b = 0; b < 4; ++b) {
            const int j = 4 * d + b;
            if (v & (8 >> b)) {
                if (j >= nbits) throw std::invalid_argument("hex row has padding bits set");
                words[j >> 6] |= uint64_t(1) << (j & 63);
            }
        }
    }
    return words;
}

void write_artifact(std::ostream& out, const CodeArtifact& art) {
    out << "# bhsd code artifact\n";
    if (!art.id.empty()) out << "id=" << art.id << "\n";
    out << "length=" << art.code.length() << "\n";
    out << "dimension=" << art.code.dimension() << "\n";
    if (art.profile.min_distance) out << "min_distance=" << art.profile.min_distance << "\n";
    out << "type=" << (art.profile.type_two ? "II" : "I") << "\n";
    if (art.profile.family != Family::None)
        out << "family=" << family_name(art.profile.family) << "\n";
    if (art.profile.beta) out << "beta=" << *art.profile.beta << "\n";
    if (art.profile.gamma) out << "gamma=" << *art.profile.gamma << "\n";
    if (art.profile.alpha) out << "alpha=" << *art.profile.alpha << "\n";
    for (const auto& [w, c] : art.profile.counts) out << "A" << w << "=" << c << "\n";
    for (int i = 0; i < art.code.dimension(); ++i)
        out << "row=" << hex_pack_row(art.code.row(i), art.code.length()) << "\n";
}

void write_artifact_file(const std::string& path, const CodeArtifact& art) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open artifact file for writing: " + path);
    write_artifact(out, art);
}

CodeArtifact read_artifact(std::istream& in) {
    CodeArtifact art;
    std::map<std::string, std::string> kv;
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("artifact: expected key=value, got '" + line + "'");
        const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "row")
            rows.push_back(val);
        else
            kv[key] = val;
    }
    auto get = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    const auto len = get("length"), dim = get("dimension");
    if (!len || !dim) throw std::invalid_argument("artifact: missing length/dimension");
    const int n = int(to_ll("length", *len)), k = int(to_ll("dimension", *dim));
    if (int(rows.size()) != k)
        throw std::invalid_argument("artifact: row count does not match dimension");
    art.code = BinaryCode(n, k);
    for (int i = 0; i < k; ++i) {
        const auto words = hex_unpack_row(rows[i], n);
        std::copy(words.begin(), words.end(), art.code.row(i));
    }
    if (auto v = get("id")) art.id = *v;
    if (auto v = get("min_distance")) art.profile.min_distance = int(to_ll("min_distance", *v));
    if (auto v = get("type")) art.profile.type_two = (*v == "II");
    if (auto v = get("family")) art.profile.family = family_from_name(*v);
    if (auto v = get("beta")) art.profile.beta = to_ll("beta", *v);
    if (auto v = get("gamma")) art.profile.gamma = to_ll("gamma", *v);
    if (auto v = get("alpha")) art.profile.alpha = to_ll("alpha", *v);
    for (const auto& [key, val] : kv)
        if (key.size() > 1 && key[0] == 'A' && isdigit(key[1]))
            art.profile.counts[std::stoi(key.substr(1))] = to_ll(key, val);
    return art;
}

CodeArtifact read_artifact_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open artifact file: " + path);
    try {
        return read_artifact(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace bhsd
