#include "bhsd/pipeline.hpp"

#include <sstream>

namespace bhsd {

std::vector<uint64_t> expand_neighbor_x(const std::string& bits, int length) {
    const int k = length / 2;
    std::string full;
    if (int(bits.size()) == length)
        full = bits;
    else if (int(bits.size()) == k)
        full = std::string(k, '0') + bits;  // standard form fixes the first k entries to 0
    else
        throw std::invalid_argument("neighbor x must have length " + std::to_string(length) +
                                    " or " + std::to_string(k));
    auto words = pack_bit_string(full);
    words.resize((length + 63) / 64);
    return words;
}

RealizedCode realize(const RecipeRecord& rec) {
    RealizedCode out;
    out.conditions = check_conditions(rec.recipe);
    if (!out.conditions.ok())
        throw std::invalid_argument("recipe " + rec.id + ": " + out.conditions.summary());
    Mat g = build_baumert_hall(rec.recipe);

    if (rec.ext_c) {
        // Bring the base down to the extension ring, put it in standard form,
        // and border it.
        Mat base = g;
        if (base.ring == Ring::F4U) base = gray_matrix_f4u_to_f2u(base);
        if (base.ring != rec.ext_c->ring)
            throw std::invalid_argument("recipe " + rec.id +
                                        ": extension ring does not match the base code ring");
        base = ring_standard_form(base).generator;
        g = extend_code(base, *rec.ext_c, *rec.ext_x);
    }

    out.binary = gray_image(g);
    if (!out.binary.is_self_dual())
        throw std::logic_error("recipe " + rec.id + ": binary image is not self-dual");

    if (rec.nb_x) {
        const auto x = expand_neighbor_x(*rec.nb_x, out.binary.length());
        const NeighborResult nb = neighbor(out.binary, x);
        out.binary = nb.code;
        out.neighbor_x_was_in_code = nb.x_was_in_code;
    }
    return out;
}

namespace {

template <class T>
void check_value(std::ostringstream& diff, bool& pass, const char* name,
                 const std::optional<T>& expected, const std::optional<T>& actual) {
    if (!expected) return;
    if (!actual) {
        diff << " " << name << ": expected " << *expected << ", not computed;";
        pass = false;
    } else if (*actual != *expected) {
        diff << " " << name << ": expected " << *expected << ", got " << *actual << ";";
        pass = false;
    }
}

}  // namespace

RowCheck verify_record(const RecipeRecord& rec, bool slow, int threads) {
    RowCheck rc;
    rc.id = rec.id;
    rc.low_confidence = rec.low_confidence;
    std::ostringstream diff;
    try {
        const RealizedCode realized = realize(rec);
        CodeAnalyzer an(realized.binary);
        rc.profile = profile_code(an);
        bool pass = true;

        if (rec.expect.d) {
            const DistanceVerdict v = an.min_distance_verify(*rec.expect.d);
            if (!v.confirmed) {
                diff << " d: expected " << *rec.expect.d << ", got "
                     << (v.found_weight ? std::to_string(v.found_weight)
                                        : "> " + std::to_string(*rec.expect.d))
                     << ";";
                pass = false;
            }
        }
        if (rec.expect.type_two && rc.profile.type_two != *rec.expect.type_two) {
            diff << " type: expected " << (*rec.expect.type_two ? "II" : "I") << ", got "
                 << (rc.profile.type_two ? "II" : "I") << ";";
            pass = false;
        }
        if (rec.expect.family && rc.profile.family != *rec.expect.family) {
            diff << " family: expected " << family_name(*rec.expect.family) << ", got "
                 << family_name(rc.profile.family)
                 << (rc.profile.note.empty() ? "" : " (" + rc.profile.note + ")") << ";";
            pass = false;
        }
        check_value(diff, pass, "beta", rec.expect.beta, rc.profile.beta);
        check_value(diff, pass, "gamma", rec.expect.gamma, rc.profile.gamma);
        check_value(diff, pass, "alpha", rec.expect.alpha, rc.profile.alpha);
        if (rec.expect.a16) {
            const long long a16 = an.count_weight(16);
            rc.profile.counts[16] = a16;
            check_value<long long>(diff, pass, "A16", rec.expect.a16, a16);
        }
        if (slow && rec.expect.a20) {
            const long long a20 = an.count_weight(20);
            rc.profile.counts[20] = a20;
            check_value<long long>(diff, pass, "A20", rec.expect.a20, a20);
        }
        if (slow && rec.expect.i16) {
            const PairDistanceInvariant inv = i16_invariant(an, threads);
            check_value<uint64_t>(diff, pass, "I16", rec.expect.i16, inv.i16);
        }
        rc.pass = pass;
    } catch (const std::exception& e) {
        rc.pass = false;
        diff << " error: " << e.what();
    }
    rc.detail = diff.str();
    if (rc.pass) {
        std::ostringstream ok;
        ok << "[" << rc.profile.min_distance << "] " << (rc.profile.type_two ? "II" : "I");
        if (rc.profile.family != Family::None) ok << " " << family_name(rc.profile.family);
        if (rc.profile.beta) ok << " beta=" << *rc.profile.beta;
        if (rc.profile.gamma) ok << " gamma=" << *rc.profile.gamma;
        if (rc.profile.alpha) ok << " alpha=" << *rc.profile.alpha;
        rc.detail = ok.str();
    }
    return rc;
}

}  // namespace bhsd
