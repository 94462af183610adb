#include <gridcolor/refutation.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gridcolor {

namespace {

class Dpll
{
public:
    Dpll(const CnfInstance &phi, const RefutationOptions &options) :
        phi_(phi),
        options_(options),
        value_(static_cast<std::size_t>(phi.var_count) + 1, 0),
        reason_(value_.size(), -1),
        occurs_(2 * value_.size())
    {
        for (std::size_t i = 0; i < phi.clauses.size(); ++i)
            for (Literal l : phi.clauses[i])
                occurs_[slot(l)].push_back(i);
        if (options.order.empty())
            for (int v = 1; v <= phi.var_count; ++v)
                order_.push_back(v);
        else
            order_ = options.order;
    }

    std::optional<std::size_t> run() { return node(); }
    ResolutionProof &proof() { return proof_; }
    const RefutationStats &stats() const { return stats_; }

private:
    std::size_t slot(Literal l) const { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0); }
    // 1 true, -1 false, 0 unassigned
    int lit_value(Literal l) const
    {
        const int v = value_[static_cast<std::size_t>(std::abs(l))];
        return l > 0 ? v : -v;
    }

    void assign(Literal l, long long reason)
    {
        value_[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
        reason_[static_cast<std::size_t>(std::abs(l))] = reason;
        trail_.push_back(std::abs(l));
    }

    // Propagates from trail position `from`; returns a falsified clause index.
    std::optional<std::size_t> propagate(std::size_t from)
    {
        for (std::size_t qi = from; qi < trail_.size(); ++qi) {
            const int v = trail_[qi];
            const Literal falsified = value_[static_cast<std::size_t>(v)] > 0 ? -v : v;
            for (std::size_t ci : occurs_[slot(falsified)]) {
                Literal unit = 0;
                int open = 0;
                bool sat = false;
                for (Literal l : phi_.clauses[ci]) {
                    const int lv = lit_value(l);
                    if (lv > 0) {
                        sat = true;
                        break;
                    }
                    if (lv == 0 && l != unit) {
                        ++open;
                        unit = l;
                    }
                }
                if (sat)
                    continue;
                if (open == 0)
                    return ci;
                if (open == 1) {
                    ++stats_.propagations;
                    assign(unit, static_cast<long long>(ci));
                }
            }
        }
        return std::nullopt;
    }

    std::size_t emit(ResolutionLine line)
    {
        if (proof_.lines.size() >= options_.max_lines)
            throw std::length_error("refutation exceeds the line limit");
        std::sort(line.clause.begin(), line.clause.end());
        line.clause.erase(std::unique(line.clause.begin(), line.clause.end()), line.clause.end());
        proof_.lines.push_back(std::move(line));
        return proof_.lines.size();
    }

    const Clause &clause_of(std::size_t line) const { return proof_.lines[line - 1].clause; }

    // Resolves away every literal propagated at this level (trail positions
    // >= level_start, excluding the decision itself).
    std::size_t explain(std::size_t line, std::size_t first_propagated)
    {
        for (std::size_t qi = trail_.size(); qi-- > first_propagated;) {
            const int v = trail_[qi];
            const Literal falsified = value_[static_cast<std::size_t>(v)] > 0 ? -v : v;
            const Clause &current = clause_of(line);
            if (! std::binary_search(current.begin(), current.end(), falsified))
                continue;
            const std::size_t reason = emit(ResolutionLine::axiom(phi_.clauses[static_cast<std::size_t>(reason_[static_cast<std::size_t>(v)])]));
            Clause merged;
            for (Literal l : clause_of(line))
                if (std::abs(l) != v)
                    merged.push_back(l);
            for (Literal l : clause_of(reason))
                if (std::abs(l) != v)
                    merged.push_back(l);
            line = emit(ResolutionLine::resolve(line, reason, v, std::move(merged)));
        }
        return line;
    }

    void undo(std::size_t to)
    {
        while (trail_.size() > to) {
            const int v = trail_.back();
            value_[static_cast<std::size_t>(v)] = 0;
            reason_[static_cast<std::size_t>(v)] = -1;
            trail_.pop_back();
        }
    }

    // Called after this level's decision (if any) sits at trail position
    // first_propagated - 1. Returns a line whose clause is falsified by the
    // assignment before this level's propagations.
    std::optional<std::size_t> node()
    {
        const std::size_t start = trail_.size();
        std::size_t first_propagated = start;
        if (start == 0) {
            // root: propagate initial unit clauses
            for (std::size_t ci = 0; ci < phi_.clauses.size(); ++ci) {
                const auto &c = phi_.clauses[ci];
                if (c.empty())
                    return emit(ResolutionLine::axiom(c));
                if (c.size() == 1 && lit_value(c[0]) == 0)
                    assign(c[0], static_cast<long long>(ci));
                else if (c.size() == 1 && lit_value(c[0]) < 0) {
                    const std::size_t line = emit(ResolutionLine::axiom(c));
                    return explain(line, 0);
                }
            }
            if (auto conflict = propagate(0)) {
                ++stats_.conflicts;
                return explain(emit(ResolutionLine::axiom(phi_.clauses[*conflict])), 0);
            }
        }
        return branch(first_propagated);
    }

    std::optional<std::size_t> branch(std::size_t first_propagated)
    {
        int x = 0;
        for (int v : order_)
            if (value_[static_cast<std::size_t>(v)] == 0) {
                x = v;
                break;
            }
        if (x == 0)
            for (int v = 1; v <= phi_.var_count && x == 0; ++v)
                if (value_[static_cast<std::size_t>(v)] == 0)
                    x = v;
        if (x == 0)
            return std::nullopt; // satisfying assignment

        ++stats_.decisions;
        std::optional<std::size_t> first;
        for (int attempt = 0; attempt < 2; ++attempt) {
            const bool positive = (attempt == 0) != options_.false_first;
            const Literal decision = positive ? x : -x;
            const std::size_t mark = trail_.size();
            assign(decision, -1);
            std::optional<std::size_t> result;
            if (auto conflict = propagate(mark)) {
                ++stats_.conflicts;
                result = explain(emit(ResolutionLine::axiom(phi_.clauses[*conflict])), mark + 1);
            }
            else
                result = branch(mark + 1);
            undo(mark);
            if (! result)
                return std::nullopt;

            const Clause &c = clause_of(*result);
            if (! std::binary_search(c.begin(), c.end(), -decision))
                return explain(*result, first_propagated);
            if (attempt == 0) {
                first = result;
                continue;
            }
            Clause merged;
            for (Literal l : clause_of(*first))
                if (std::abs(l) != x)
                    merged.push_back(l);
            for (Literal l : c)
                if (std::abs(l) != x)
                    merged.push_back(l);
            const std::size_t resolved = emit(ResolutionLine::resolve(*first, *result, x, std::move(merged)));
            return explain(resolved, first_propagated);
        }
        return std::nullopt;
    }

    const CnfInstance &phi_;
    const RefutationOptions &options_;
    std::vector<int> value_;
    std::vector<long long> reason_;
    std::vector<std::vector<std::size_t>> occurs_;
    std::vector<int> order_;
    std::vector<int> trail_;
    ResolutionProof proof_;
    RefutationStats stats_;
};

// Keeps only lines reachable from the last one, preserving order.
ResolutionProof compact(const ResolutionProof &proof, std::size_t root)
{
    std::vector<char> keep(proof.lines.size() + 1, 0);
    keep[root] = 1;
    for (std::size_t i = root; i >= 1; --i) {
        if (! keep[i])
            continue;
        const auto &line = proof.lines[i - 1];
        if (line.kind == ResolutionLine::Kind::Resolve) {
            keep[line.a] = 1;
            keep[line.b] = 1;
        }
    }
    std::vector<std::size_t> renumber(proof.lines.size() + 1, 0);
    ResolutionProof out;
    for (std::size_t i = 1; i <= root; ++i) {
        if (! keep[i])
            continue;
        auto line = proof.lines[i - 1];
        if (line.kind == ResolutionLine::Kind::Resolve) {
            line.a = renumber[line.a];
            line.b = renumber[line.b];
        }
        out.lines.push_back(std::move(line));
        renumber[i] = out.lines.size();
    }
    return out;
}

} // namespace

std::optional<Refutation> export_refutation(const CnfInstance &phi, const RefutationOptions &options)
{
    Dpll dpll(phi, options);
    auto root = dpll.run();
    if (! root)
        return std::nullopt;
    Refutation out;
    out.proof = compact(dpll.proof(), *root);
    out.stats = dpll.stats();
    return out;
}

std::vector<int> column_major_order(const GridVariables &vars)
{
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(vars.count()));
    for (int j = 1; j <= vars.cols(); ++j)
        for (int i = 1; i <= vars.rows(); ++i)
            for (int k = 1; k <= vars.colors(); ++k)
                order.push_back(vars.id(i, j, k));
    return order;
}

} // namespace gridcolor
