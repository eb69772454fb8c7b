#include "hstar/classify.hpp"

#include "hstar/deltaprops.hpp"

#include <algorithm>
#include <numeric>

namespace hstar::classify {

const char* realization_status_name(RealizationStatus s) {
    switch (s) {
    case RealizationStatus::RealizedByFamily: return "realized_by_family";
    case RealizationStatus::RealizedBySearch: return "realized_by_search";
    case RealizationStatus::Unrealized: return "unrealized";
    case RealizationStatus::UnrealizedWithinBudget:
        return "unrealized_within_budget";
    }
    return "unknown";
}

namespace {

std::vector<long> gap_profile(const IntVec& delta) {
    std::vector<long> ones;
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (delta[i] != 0) ones.push_back(static_cast<long>(i));
    std::vector<long> gaps;
    for (std::size_t j = 1; j < ones.size(); ++j)
        gaps.push_back(ones[j] - ones[j - 1] - 1);
    gaps.push_back(static_cast<long>(delta.size()) - 1 - ones.back());
    return gaps;
}

Candidate make_candidate(IntVec delta) {
    Candidate c;
    c.dim = static_cast<long>(delta.size()) - 1;
    c.volume = 0;
    for (const auto& x : delta) c.volume += x.convert_to<long>();
    c.gaps = gap_profile(delta);
    c.delta = std::move(delta);
    return c;
}

bool next_combination(std::vector<long>& idx, long n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + static_cast<long>(k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Candidate candidate_from_delta(IntVec delta) {
    if (delta.empty() || delta.front() != 1)
        throw Error(ErrorKind::Domain, "sequence must start with delta_0 = 1");
    for (const auto& x : delta)
        if (x != 0 && x != 1)
            throw Error(ErrorKind::Domain, "sequence entries must be 0 or 1");
    return make_candidate(std::move(delta));
}

std::vector<Candidate> enumerate_candidates(long d, long vol) {
    if (vol < 1 || vol > 5)
        throw Error(ErrorKind::Domain,
                    "classification supports volumes 1 through 5 only");
    if (d < 1) throw Error(ErrorKind::Domain, "dimension must be positive");

    std::vector<Candidate> out;
    if (vol - 1 > d) return out;

    std::vector<long> ones(vol - 1);
    std::iota(ones.begin(), ones.end(), 0);
    bool more = true;
    while (more) {
        IntVec delta(d + 1, 0);
        delta[0] = 1;
        for (long p : ones) delta[1 + p] = 1; // positions among 1..d
        if (props::is_shifted_symmetric(delta) && props::stanley_holds(delta))
            out.push_back(make_candidate(std::move(delta)));
        more = !ones.empty() && next_combination(ones, d);
        if (ones.empty()) more = false;
    }
    return out;
}

namespace {

// Degree histogram of the box points of conv{0, e_1, ..., e_{d-1}, w},
// w = (w_1, ..., w_{d-1}, vol), compared against a target pattern with early
// exit. The box group here is cyclic: member t has coefficient t/vol on w,
// ((-t*w_i) mod vol)/vol on e_i, and the origin-vertex coefficient fills the
// degree to an integer, so deg(t) = ceil((t + sum_i ((-t*w_i) mod vol))/vol).
struct HermiteSweeper {
    long vol;
    std::vector<int> degree_slot; // degree -> 1-based slot of a target one, else 0

    bool matches(const std::vector<long>& digit_sums) const {
        // digit_sums[t-1] = sum_i ((-t*w_i) mod vol) for t = 1..vol-1; each
        // nonzero group element must land on a distinct target degree.
        unsigned filled = 0;
        for (long t = 1; t < vol; ++t) {
            long q = t + digit_sums[t - 1];
            long deg = (q + vol - 1) / vol; // ceil, q > 0
            int slot = degree_slot[static_cast<std::size_t>(deg)];
            if (slot == 0 || (filled & (1u << (slot - 1)))) return false;
            filled |= 1u << (slot - 1);
        }
        return true;
    }
};

} // namespace

RealizationResult search_realization(const Candidate& c,
                                     unsigned long long budget) {
    if (budget == 0)
        throw Error(ErrorKind::Budget, "search budget must be positive");
    const long d = c.dim;
    const long vol = c.volume;

    RealizationResult res;
    res.candidate = c;
    res.searched = true;
    res.examined = 0;

    HermiteSweeper sweeper;
    sweeper.vol = vol;
    sweeper.degree_slot.assign(c.delta.size(), 0);
    int next_slot = 1;
    for (std::size_t i = 1; i < c.delta.size(); ++i)
        if (c.delta[i] != 0) sweeper.degree_slot[i] = next_slot++;

    // contrib[t][a] = (-t*a) mod vol
    std::vector<std::vector<long>> contrib(vol, std::vector<long>(vol, 0));
    for (long t = 1; t < vol; ++t)
        for (long a = 0; a < vol; ++a)
            contrib[t][a] = ((-t * a) % vol + vol) % vol;

    std::vector<long> w(d - 1, 0);
    std::vector<long> sums(vol - 1, 0); // per t, sum of contributions
    bool exhausted = false;
    std::optional<std::vector<long>> found;

    for (;;) {
        ++res.examined;
        if (vol == 1 || sweeper.matches(sums)) {
            found = w;
            break;
        }
        if (res.examined >= budget) break;
        // Odometer increment, keeping the per-t contribution sums in step.
        long pos = 0;
        while (pos < d - 1) {
            long old = w[pos];
            long next = old + 1 == vol ? 0 : old + 1;
            w[pos] = next;
            for (long t = 1; t < vol; ++t)
                sums[t - 1] += contrib[t][next] - contrib[t][old];
            if (next != 0) break;
            ++pos;
        }
        if (pos >= d - 1) {
            exhausted = true;
            break;
        }
    }

    if (found) {
        std::vector<IntVec> verts;
        verts.push_back(IntVec(d, 0));
        for (long i = 1; i < d; ++i) {
            IntVec v(d, 0);
            v[i - 1] = 1;
            verts.push_back(std::move(v));
        }
        IntVec last(d, 0);
        for (long i = 0; i + 1 < d; ++i) last[i] = (*found)[i];
        last[d - 1] = vol;
        verts.push_back(std::move(last));
        poly::Simplex witness(static_cast<std::size_t>(d), std::move(verts));
        // The sweep uses a specialized histogram; certify through the engine.
        if (ehrhart::delta_from_box(witness).entries() != c.delta)
            throw std::logic_error("search witness failed verification");
        res.status = RealizationStatus::RealizedBySearch;
        res.witness = witness.base();
        return res;
    }

    // A finished sweep covers every lattice-equivalence class exactly when
    // the volume is prime (cyclic box group); volume 1 has a single class.
    const bool complete_cover = exhausted && (vol == 1 || is_prime(Int(vol)));
    res.status = complete_cover ? RealizationStatus::Unrealized
                                : RealizationStatus::UnrealizedWithinBudget;
    return res;
}

namespace {

RealizationResult family_result(const Candidate& c, fam::FamilyInstance inst) {
    if (ehrhart::delta_from_box(inst.simplex()).entries() != c.delta)
        throw std::logic_error("family witness failed verification: " +
                               inst.spec.display_name());
    RealizationResult res;
    res.candidate = c;
    res.status = RealizationStatus::RealizedByFamily;
    res.witness = std::move(inst.polytope);
    res.family = std::move(inst.spec);
    return res;
}

} // namespace

RealizationResult realize(const Candidate& c, unsigned long long budget) {
    const auto& g = c.gaps;
    const long vol = c.volume;

    if (vol == 1)
        return family_result(c, fam::shifted_standard(c.dim, 0));

    const bool all_zero = std::all_of(g.begin(), g.end(),
                                      [](long x) { return x == 0; });
    if (all_zero)
        return family_result(c, fam::shifted_standard(c.dim, 1));

    const bool all_equal =
        std::all_of(g.begin(), g.end(), [&](long x) { return x == g[0]; });
    if (all_equal)
        return family_result(c, fam::circulant(c.dim, vol));

    if (vol == 4 && g[0] > g[1])
        return family_result(c, fam::volume4_family(g[1], g[0] - g[1]));

    if (vol == 5) {
        const long p1 = g[0], p2 = g[1], p3 = g[2];
        if (p2 == p3 && p1 > p2)
            return family_result(
                c, fam::volume5_family(p2, p1 - p2, fam::Vol5Variant::A));
        if (p3 == p1 && p2 < p3)
            return family_result(
                c, fam::volume5_family(p2, p1 - p2, fam::Vol5Variant::B));
        if (p2 == p1 && p3 < p2)
            return family_result(
                c, fam::volume5_family(p3, p1 - p3, fam::Vol5Variant::C));
    }

    return search_realization(c, budget);
}

ClassificationReport classification_report(long d_max, long vol,
                                           unsigned long long budget) {
    if (vol < 1 || vol > 5)
        throw Error(ErrorKind::Domain,
                    "classification supports volumes 1 through 5 only");
    ClassificationReport rep;
    rep.d_max = d_max;
    rep.volume = vol;
    for (long d = 1; d <= d_max; ++d)
        for (auto& c : enumerate_candidates(d, vol))
            rep.entries.push_back(realize(c, budget));
    for (std::size_t i = 0; i < rep.entries.size(); ++i)
        if (rep.entries[i].status != RealizationStatus::RealizedByFamily &&
            rep.entries[i].status != RealizationStatus::RealizedBySearch)
            rep.unrealized.push_back(i);
    return rep;
}

} // namespace hstar::classify
