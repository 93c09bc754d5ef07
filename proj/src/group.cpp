#include "exotic/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace exotic {

GroupElement::GroupElement(CycloMat m) : mat_(std::move(m)) {
    if (mat_.rows() != 2 || mat_.cols() != 2) throw Error("group element must be 2x2");
    const Cyclo &a = mat_.at(0, 0), &b = mat_.at(0, 1), &c = mat_.at(1, 0), &d = mat_.at(1, 1);
    Cyclo det = a * d - b * c;
    if (!(det.is_rational() && det.rational_value() == 1))
        throw Error("matrix does not have determinant exactly 1");
    // SU(2) shape: d = conj(a), c = -conj(b)
    if (!(d == a.conj() && c == -(b.conj())))
        throw Error("matrix is not unitary (SU(2) membership fails)");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return GroupElement(mat_ * o.mat_);
}

GroupElement GroupElement::inverse() const {
    const CycloField& f = field();
    CycloMat m(f, 2, 2);
    m.at(0, 0) = mat_.at(1, 1);
    m.at(0, 1) = -mat_.at(0, 1);
    m.at(1, 0) = -mat_.at(1, 0);
    m.at(1, 1) = mat_.at(0, 0);
    return GroupElement(std::move(m));
}

GroupElement GroupElement::operator-() const {
    return GroupElement(mat_.scaled(Cyclo::from_rational(field(), -1)));
}

bool GroupElement::is_identity() const {
    return mat_ == CycloMat::identity(field(), 2);
}

GroupElement star_conjugate(const GroupElement& g) {
    long n = g.field().conductor();
    if (n % 40 != 0) throw Error("star conjugation expects conductor divisible by 40");
    // CRT: k = 1 mod (n/5^v), k = 2 mod 5^v would need care for v>1; the
    // groups at hand use v = 1, so search the small window directly.
    long k = 0;
    long two_and_rest = n / 5;
    for (long cand = 1; cand < n; ++cand) {
        if (std::gcd(cand, n) != 1) continue;
        if (cand % two_and_rest != 1) continue;
        // require sqrt5 -> -sqrt5: cand must be a non-residue mod 5
        long r = cand % 5;
        if (r == 2 || r == 3) {
            k = cand;
            break;
        }
    }
    if (k == 0) throw InternalInconsistency("no Galois twist moving sqrt5 found");
    const CycloField& f = g.field();
    CycloMat m(f, 2, 2);
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c) m.at(r, c) = g.entry(r, c).galois(k).conj();
    return GroupElement(std::move(m));
}

std::string FiniteSubgroup::key_of(const GroupElement& g) {
    std::ostringstream os;
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c) os << g.entry(r, c).str() << "|";
    return os.str();
}

FiniteSubgroup FiniteSubgroup::generate(const std::vector<GroupElement>& generators,
                                        long max_order, std::string name) {
    if (generators.empty()) throw Error("need at least one generator");
    FiniteSubgroup g;
    g.name_ = std::move(name);
    g.field_ = &generators.front().field();
    for (const GroupElement& gen : generators)
        if (gen.field().conductor() != g.field_->conductor())
            throw ConductorMismatch("generators must share one conductor");
    g.generators_ = generators;

    GroupElement id{CycloMat::identity(*g.field_, 2)};
    g.elements_.push_back(id);
    g.bfs_parent_.emplace_back(-1, -1);
    g.index_[key_of(id)] = 0;

    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        // collect the next BFS level, sorted lexicographically
        std::vector<std::pair<GroupElement, std::pair<long, long>>> next;
        for (long ei : frontier) {
            for (size_t k = 0; k < generators.size(); ++k) {
                GroupElement cand = g.elements_[ei] * generators[k];
                std::string key = key_of(cand);
                if (g.index_.count(key)) continue;
                bool pending = false;
                for (const auto& [el, src] : next)
                    if (el == cand) {
                        pending = true;
                        break;
                    }
                if (!pending) next.emplace_back(std::move(cand), std::make_pair(ei, static_cast<long>(k)));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
        frontier.clear();
        for (auto& [el, src] : next) {
            long idx = static_cast<long>(g.elements_.size());
            if (idx >= max_order)
                throw ClosureExceeded("group closure exceeds max_order = " + std::to_string(max_order));
            g.index_[key_of(el)] = idx;
            g.elements_.push_back(std::move(el));
            g.bfs_parent_.push_back(src);
            frontier.push_back(idx);
        }
    }
    return g;
}

std::optional<long> FiniteSubgroup::index_of(const GroupElement& g) const {
    auto it = index_.find(key_of(g));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

long FiniteSubgroup::mul_index(long i, long j) const {
    auto idx = index_of(elements_[i] * elements_[j]);
    if (!idx) throw InternalInconsistency("group not closed under multiplication");
    return *idx;
}

long FiniteSubgroup::inverse_index(long i) const {
    auto idx = index_of(elements_[i].inverse());
    if (!idx) throw InternalInconsistency("group not closed under inverse");
    return *idx;
}

namespace {
long element_order(const GroupElement& g) {
    GroupElement acc = g;
    long ord = 1;
    while (!acc.is_identity()) {
        acc = acc * g;
        ++ord;
        if (ord > 1000000) throw InternalInconsistency("element order runaway");
    }
    return ord;
}
} // namespace

const std::vector<ConjugacyClass>& FiniteSubgroup::conjugacy_classes() const {
    if (!classes_.empty() || elements_.empty()) return classes_;
    long n = order();
    class_of_.assign(n, -1);
    for (long i = 0; i < n; ++i) {
        if (class_of_[i] >= 0) continue;
        long cls = static_cast<long>(classes_.size());
        // orbit under conjugation by generators
        std::vector<long> orbit{i};
        class_of_[i] = cls;
        for (size_t h = 0; h < orbit.size(); ++h) {
            for (const GroupElement& gen : generators_) {
                GroupElement conj = gen * elements_[orbit[h]] * gen.inverse();
                long j = index_of(conj).value();
                if (class_of_[j] < 0) {
                    class_of_[j] = cls;
                    orbit.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        ConjugacyClass c;
        c.representative = orbit.front();
        c.members = std::move(orbit);
        c.element_order = element_order(elements_[i]);
        classes_.push_back(std::move(c));
    }
    return classes_;
}

long FiniteSubgroup::class_of(long element_index) const {
    conjugacy_classes();
    return class_of_[element_index];
}

bool FiniteSubgroup::is_subgroup_of(const FiniteSubgroup& g) const {
    if (g.order() % order() != 0) return false;
    for (const GroupElement& el : elements_) {
        GroupElement promoted =
            el.field().conductor() == g.field().conductor() ? el : el.promote(g.field());
        if (!g.contains(promoted)) return false;
    }
    return true;
}

std::vector<long> FiniteSubgroup::coset_representatives(const FiniteSubgroup& h) const {
    if (!h.is_subgroup_of(*this)) throw NotASubgroup("H is not a subgroup of G");
    std::vector<bool> covered(order(), false);
    std::vector<long> reps;
    for (long i = 0; i < order(); ++i) {
        if (covered[i]) continue;
        reps.push_back(i);
        for (const GroupElement& hel : h.elements()) {
            GroupElement prom =
                hel.field().conductor() == field().conductor() ? hel : hel.promote(field());
            covered[index_of(elements_[i] * prom).value()] = true;
        }
    }
    return reps;
}

std::vector<long> FiniteSubgroup::coset_members(long rep_index, const FiniteSubgroup& h) const {
    std::vector<long> members;
    for (const GroupElement& hel : h.elements()) {
        GroupElement prom =
            hel.field().conductor() == field().conductor() ? hel : hel.promote(field());
        members.push_back(index_of(elements_[rep_index] * prom).value());
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteSubgroup make_2T() {
    const CycloField& f = field40();
    return FiniteSubgroup::generate(
        {GroupElement(gate_x(f)), GroupElement(gate_z(f)), GroupElement(gate_f(f))}, 10000, "2T");
}

FiniteSubgroup make_2O() {
    const CycloField& f = field40();
    return FiniteSubgroup::generate({GroupElement(gate_x(f)), GroupElement(gate_z(f)),
                                     GroupElement(gate_f(f)), GroupElement(gate_h(f)),
                                     GroupElement(gate_s(f))},
                                    10000, "2O");
}

FiniteSubgroup make_2I() {
    const CycloField& f = field40();
    return FiniteSubgroup::generate({GroupElement(gate_x(f)), GroupElement(gate_z(f)),
                                     GroupElement(gate_f(f)), GroupElement(gate_phi(f))},
                                    10000, "2I");
}

FiniteSubgroup make_2I_star() {
    const CycloField& f = field40();
    return FiniteSubgroup::generate({GroupElement(gate_x(f)), GroupElement(gate_z(f)),
                                     GroupElement(gate_f(f)),
                                     star_conjugate(GroupElement(gate_phi(f)))},
                                    10000, "2I*");
}

FiniteSubgroup make_bd(long n) {
    if (n < 1) throw Error("BD_n needs n >= 1");
    const CycloField& f = CycloField::get(lcm_long(4 * n, 8));
    return FiniteSubgroup::generate({GroupElement(gate_x(f)), GroupElement(gate_phase(f, n))},
                                    10000, "BD" + std::to_string(n));
}

FiniteSubgroup make_group_by_name(const std::string& name) {
    if (name == "2T") return make_2T();
    if (name == "2O") return make_2O();
    if (name == "2I") return make_2I();
    if (name == "2I*") return make_2I_star();
    if (name.rfind("BD", 0) == 0) {
        long n = std::stol(name.substr(2));
        return make_bd(n);
    }
    throw Error("unknown group name: " + name);
}

namespace {
const FiniteSubgroup& clifford_group() {
    static const FiniteSubgroup* c = new FiniteSubgroup(make_2O());
    return *c;
}
} // namespace

bool clifford_membership(const GroupElement& g) {
    const FiniteSubgroup& c = clifford_group();
    long n = lcm_long(g.field().conductor(), c.field().conductor());
    const CycloField& f = CycloField::get(n);
    GroupElement gp = g.field().conductor() == n ? g : g.promote(f);
    if (n == c.field().conductor()) return c.contains(gp);
    for (const GroupElement& el : c.elements())
        if (el.promote(f) == gp) return true;
    return false;
}

HierarchyClass classify_hierarchy(const GroupElement& g) {
    if (clifford_membership(g)) return HierarchyClass::Clifford;
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c)
            if (!in_two_power_subfield(g.entry(r, c))) return HierarchyClass::Exotic;
    return HierarchyClass::Indeterminate;
}

const char* hierarchy_class_name(HierarchyClass c) {
    switch (c) {
        case HierarchyClass::Clifford: return "clifford";
        case HierarchyClass::Exotic: return "exotic";
        case HierarchyClass::Indeterminate: return "indeterminate";
    }
    return "?";
}

} // namespace exotic
