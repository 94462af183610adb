#include <gridcolor/game.hpp>

#include <boost/multiprecision/mpfr.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace gridcolor {

namespace {

using boost::multiprecision::mpfr_float;

mpfr_float exact(const std::string &decimal, int digits)
{
    mpfr_float x;
    x.precision(static_cast<unsigned>(digits));
    x = mpfr_float(decimal, static_cast<unsigned>(digits));
    return x;
}

struct LgPair
{
    mpfr_float lg_a, lg_b;
};

LgPair lg_values(const DelayerParams &params, int digits)
{
    // a few guard digits beyond what gets printed
    const int work = digits + 10;
    mpfr_float a = exact(params.a, work);
    mpfr_float one = exact("1", work);
    mpfr_float b = a / (a - one);
    mpfr_float ln2 = log(exact("2", work));
    return {mpfr_float(log(a) / ln2), mpfr_float(log(b) / ln2)};
}

std::string render(const mpfr_float &x, int digits)
{
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::fixed);
}

long double lg_a_ld(const DelayerParams &p)
{
    return std::log2(std::stold(p.a));
}

long double lg_b_ld(const DelayerParams &p)
{
    const long double a = std::stold(p.a);
    return std::log2(a / (a - 1));
}

} // namespace

std::string to_string(Chooser chooser)
{
    return chooser == Chooser::Prover ? "PROVER" : "DELAYER";
}

std::string to_string(MoveRule rule)
{
    switch (rule) {
    case MoveRule::RectBlock: return "RECT_BLOCK";
    case MoveRule::PanicT: return "PANIC_T";
    case MoveRule::Defer: return "DEFER";
    }
    return "?";
}

std::string to_string(EndKind kind)
{
    switch (kind) {
    case EndKind::ColorClause: return "COLOR_CLAUSE";
    case EndKind::RectClause: return "RECT_CLAUSE";
    case EndKind::Exhausted: return "EXHAUSTED";
    }
    return "?";
}

std::string to_string(ProverKind kind)
{
    switch (kind) {
    case ProverKind::Random: return "random";
    case ProverKind::CellFocus: return "cellfocus";
    case ProverKind::Minimax: return "minimax";
    }
    return "?";
}

std::optional<ProverKind> parse_prover(const std::string &name)
{
    if (name == "random")
        return ProverKind::Random;
    if (name == "cellfocus")
        return ProverKind::CellFocus;
    if (name == "minimax")
        return ProverKind::Minimax;
    return std::nullopt;
}

void check_config(const GameConfig &config)
{
    if (config.rows < 1 || config.cols < 1 || config.colors < 1)
        throw std::invalid_argument("game needs n, m, c >= 1");
    long double a = 0;
    try {
        a = std::stold(config.params.a);
    }
    catch (const std::exception &) {
        throw std::invalid_argument("parameter a is not a number: " + config.params.a);
    }
    if (! (a > 1))
        throw std::invalid_argument("parameter a must exceed 1");
    if (! (config.params.r > 0 && config.params.r < 1))
        throw std::invalid_argument("parameter r must lie in (0,1)");
}

std::string lg_a_decimal(const DelayerParams &params, int digits)
{
    return render(lg_values(params, digits).lg_a, digits);
}

std::string lg_b_decimal(const DelayerParams &params, int digits)
{
    return render(lg_values(params, digits).lg_b, digits);
}

double reciprocal_identity_error(const DelayerParams &params)
{
    const int work = 60;
    mpfr_float a = exact(params.a, work);
    mpfr_float one = exact("1", work);
    mpfr_float b = a / (a - one);
    mpfr_float err = abs(one / a + one / b - one);
    return err.convert_to<double>();
}

std::string points_decimal(const GameTranscript &t, const DelayerParams &params, int digits)
{
    auto lg = lg_values(params, digits);
    mpfr_float total = lg.lg_a * mpfr_float(t.prover_false) + lg.lg_b * mpfr_float(t.prover_true);
    return render(total, digits);
}

double points(const GameTranscript &t, const DelayerParams &params)
{
    return static_cast<double>(static_cast<long double>(t.prover_false) * lg_a_ld(params) + static_cast<long double>(t.prover_true) * lg_b_ld(params));
}

int default_precision()
{
    if (const char *env = std::getenv("GRIDCOLOR_PRECISION")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0')
            return static_cast<int>(std::clamp(v, 20L, 1000L));
    }
    return 40;
}

GameState::GameState(const GameConfig &config) :
    config_(config),
    cnf_(build_cnf(config.rows, config.cols, config.colors, config.family)),
    values_(static_cast<std::size_t>(cnf_.cnf.var_count) + 1, Value::Unset),
    clauses_of_(values_.size())
{
    check_config(config);
    for (std::size_t i = 0; i < cnf_.cnf.clauses.size(); ++i)
        for (Literal l : cnf_.cnf.clauses[i])
            clauses_of_[static_cast<std::size_t>(std::abs(l))].push_back(i);
    // at least r*c prover-F colors; small slack absorbs binary rounding of r
    panic_threshold_ = static_cast<std::size_t>(std::ceil(config.params.r * config.colors - 1e-9));
}

void GameState::set_values(std::vector<Value> values)
{
    if (values.size() != values_.size())
        throw std::invalid_argument("state size mismatch");
    values_ = std::move(values);
}

bool GameState::would_complete(int var) const
{
    for (std::size_t ci : clauses_of_[static_cast<std::size_t>(var)]) {
        if (cnf_.is_color_clause(ci))
            continue;
        bool all = true;
        for (Literal l : cnf_.cnf.clauses[ci])
            if (-l != var && value(-l) != Value::True) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

std::size_t GameState::prover_false_in_cell(int var) const
{
    const auto t = cnf_.vars.triple(var);
    std::size_t n = 0;
    for (int k = 1; k <= cnf_.vars.colors(); ++k)
        if (value(cnf_.vars.id(t.row, t.col, k)) == Value::ProverFalse)
            ++n;
    return n;
}

bool GameState::cell_has_true(int var) const
{
    const auto t = cnf_.vars.triple(var);
    for (int k = 1; k <= cnf_.vars.colors(); ++k)
        if (value(cnf_.vars.id(t.row, t.col, k)) == Value::True)
            return true;
    return false;
}

GameState::Response GameState::delayer_response(int var) const
{
    if (would_complete(var))
        return {MoveRule::RectBlock, false};
    if (! cell_has_true(var) && prover_false_in_cell(var) >= panic_threshold_)
        return {MoveRule::PanicT, true};
    return {MoveRule::Defer, false};
}

std::optional<std::size_t> GameState::set(int var, bool v, bool by_prover)
{
    auto &slot = values_.at(static_cast<std::size_t>(var));
    if (slot != Value::Unset)
        throw std::logic_error("variable " + std::to_string(var) + " already set");
    slot = v ? Value::True : (by_prover ? Value::ProverFalse : Value::DelayerFalse);
    for (std::size_t ci : clauses_of_[static_cast<std::size_t>(var)]) {
        const auto &clause = cnf_.cnf.clauses[ci];
        const bool falsified = std::all_of(clause.begin(), clause.end(), [&](Literal l) {
            const Value x = value(std::abs(l));
            if (x == Value::Unset)
                return false;
            return (x == Value::True) != (l > 0);
        });
        if (falsified)
            return ci;
    }
    return std::nullopt;
}

void GameState::unset(int var)
{
    values_.at(static_cast<std::size_t>(var)) = Value::Unset;
}

namespace {

constexpr double kTieEps = 1e-12;

class MinimaxSearch
{
public:
    explicit MinimaxSearch(const GameConfig &config) :
        state_(config),
        lg_a_(static_cast<double>(lg_a_ld(config.params))),
        lg_b_(static_cast<double>(lg_b_ld(config.params)))
    {
        if (state_.var_count() > 20)
            throw std::invalid_argument("minimax prover supports at most 20 variables, formula has " + std::to_string(state_.var_count()));
    }

    GameState &state() { return state_; }

    struct Plan
    {
        int var = 0;
        bool value = false; ///< value on defer
        double score = 0;
    };

    double value() { return best().score; }

    // Best Prover choice from the current state.
    Plan best()
    {
        Plan plan{0, false, 0};
        bool found = false;
        for (int v = 1; v <= state_.var_count(); ++v) {
            if (state_.value(v) != GameState::Value::Unset)
                continue;
            const auto resp = state_.delayer_response(v);
            if (resp.rule != MoveRule::Defer) {
                const double s = after(v, resp.value, false);
                consider(plan, found, v, false, s);
                continue;
            }
            consider(plan, found, v, false, lg_a_ + after(v, false, true));
            consider(plan, found, v, true, lg_b_ + after(v, true, true));
        }
        return found ? plan : Plan{0, false, 0};
    }

private:
    static void consider(Plan &plan, bool &found, int v, bool value, double score)
    {
        if (! found || score < plan.score - kTieEps) {
            plan = Plan{v, value, score};
            found = true;
        }
    }

    double after(int v, bool value, bool by_prover)
    {
        const bool ended = state_.set(v, value, by_prover).has_value();
        double s = 0;
        if (! ended)
            s = memo_value();
        state_.unset(v);
        return s;
    }

    double memo_value()
    {
        std::uint64_t key = 0;
        for (int v = state_.var_count(); v >= 1; --v)
            key = key * 4 + static_cast<std::uint64_t>(state_.value(v));
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const double s = best().score;
        memo_.emplace(key, s);
        return s;
    }

    GameState state_;
    double lg_a_, lg_b_;
    std::unordered_map<std::uint64_t, double> memo_;
};

class Prover
{
public:
    explicit Prover(const GameConfig &config) :
        kind_(config.prover),
        rng_(config.seed)
    {
        if (kind_ == ProverKind::Minimax)
            minimax_.emplace(config);
    }

    // Returns (variable, value used if the Delayer defers).
    std::pair<int, bool> choose(const GameState &state)
    {
        switch (kind_) {
        case ProverKind::Random: {
            std::vector<int> open;
            for (int v = 1; v <= state.var_count(); ++v)
                if (state.value(v) == GameState::Value::Unset)
                    open.push_back(v);
            std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
            const int v = open[pick(rng_)];
            std::bernoulli_distribution coin(0.5);
            return {v, coin(rng_)};
        }
        case ProverKind::CellFocus: return {cell_focus(state), false};
        case ProverKind::Minimax: {
            minimax_->state().set_values(state.values());
            const auto plan = minimax_->best();
            return {plan.var, plan.value};
        }
        }
        return {0, false};
    }

private:
    static int cell_focus(const GameState &state)
    {
        const auto &vars = state.cnf().vars;
        int best_var = 0;
        std::size_t best_count = 0;
        bool found = false;
        for (int i = 1; i <= vars.rows(); ++i)
            for (int j = 1; j <= vars.cols(); ++j) {
                int first_open = 0;
                std::size_t falses = 0;
                bool has_true = false;
                for (int k = 1; k <= vars.colors(); ++k) {
                    const int v = vars.id(i, j, k);
                    const auto x = state.value(v);
                    if (x == GameState::Value::True)
                        has_true = true;
                    else if (x == GameState::Value::ProverFalse)
                        ++falses;
                    else if (x == GameState::Value::Unset && first_open == 0)
                        first_open = v;
                }
                if (has_true || first_open == 0)
                    continue;
                if (! found || falses > best_count) {
                    found = true;
                    best_count = falses;
                    best_var = first_open;
                }
            }
        if (found)
            return best_var;
        for (int v = 1; v <= state.var_count(); ++v)
            if (state.value(v) == GameState::Value::Unset)
                return v;
        return 0;
    }

    ProverKind kind_;
    std::mt19937_64 rng_;
    std::optional<MinimaxSearch> minimax_;
};

} // namespace

GameTranscript play(const GameConfig &config)
{
    GameState state(config);
    Prover prover(config);
    GameTranscript t;
    t.seed = config.seed;

    for (std::size_t turn = 0; turn < static_cast<std::size_t>(state.var_count()); ++turn) {
        const auto [var, preferred] = prover.choose(state);
        const auto resp = state.delayer_response(var);
        Move move;
        move.var = var;
        move.at = state.cnf().vars.triple(var);
        move.rule = resp.rule;
        if (resp.rule == MoveRule::Defer) {
            move.chooser = Chooser::Prover;
            move.value = preferred;
            ++(preferred ? t.prover_true : t.prover_false);
        }
        else {
            move.chooser = Chooser::Delayer;
            move.value = resp.value;
        }
        t.moves.push_back(move);
        if (auto clause = state.set(var, move.value, move.chooser == Chooser::Prover)) {
            t.end = state.is_color_clause(*clause) ? EndKind::ColorClause : EndKind::RectClause;
            t.end_clause = *clause;
            return t;
        }
    }
    t.end = EndKind::Exhausted;
    return t;
}

std::vector<GameTranscript> play_many(const GameConfig &config, std::size_t games, std::size_t jobs)
{
    std::vector<GameTranscript> out(games);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t g = first; g < games; g += stride) {
            GameConfig c = config;
            c.seed = config.seed + g;
            out[g] = play(c);
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, games));
    if (jobs == 1) {
        work(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back(work, w, jobs);
    for (auto &th : pool)
        th.join();
    return out;
}

double minimax_value(const GameConfig &config)
{
    MinimaxSearch search(config);
    return search.value();
}

std::pair<std::uint64_t, std::uint64_t> recount(const GameTranscript &t)
{
    std::uint64_t f = 0, tr = 0;
    for (const auto &m : t.moves)
        if (m.chooser == Chooser::Prover && m.rule == MoveRule::Defer)
            ++(m.value ? tr : f);
    return {f, tr};
}

double analytic_point_bound(int c, const DelayerParams &params)
{
    return bound_report(c, params).bound;
}

BoundReport bound_report(int c, const DelayerParams &params)
{
    if (c < 1)
        throw std::invalid_argument("bound needs c >= 1");
    const long double la = lg_a_ld(params), lb = lg_b_ld(params);
    const long double cc = c;
    BoundReport r;
    r.c = c;
    r.term_fraction_a = static_cast<double>(params.q * cc * la);
    r.term_fraction_b = static_cast<double>(params.s * cc * lb);
    r.term_quadratic = static_cast<double>(params.coefficient * cc * cc);
    r.bound = std::min({r.term_fraction_a, r.term_fraction_b, r.term_quadratic});
    r.derived_coefficient = (3 - 3 * params.q - params.s) * params.r;
    r.bound_derived = std::min({r.term_fraction_a, r.term_fraction_b, static_cast<double>(r.derived_coefficient * cc * cc)});
    r.target = params.D * c;
    r.meets_target = r.bound >= r.target;
    r.meets_target_derived = r.bound_derived >= r.target;
    return r;
}

namespace {

std::string trim_number(double x)
{
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

} // namespace

std::string report_tree_res_bound(double p)
{
    if (p < 0)
        throw std::invalid_argument("points must be nonnegative");
    if (p == 0)
        return "size ≥ 1";
    const std::string exp = trim_number(p);
    if (p <= 62) {
        if (p == std::floor(p))
            return "size ≥ 2^" + exp + " = " + std::to_string(std::uint64_t{1} << static_cast<int>(p));
        return "size ≥ 2^" + exp + " ≈ " + trim_number(std::exp2(p));
    }
    return "size ≥ 2^" + exp;
}

std::string report_tree_res_bound_symbolic(double D)
{
    return "size ≥ 2^{" + trim_number(D) + "c}";
}

std::string transcript_json(const GameTranscript &t, const GameConfig &config, int digits)
{
    using nlohmann::json;
    json moves = json::array();
    for (const auto &m : t.moves)
        moves.push_back({{"var", m.var},
                         {"cell", {m.at.row, m.at.col}},
                         {"color", m.at.color},
                         {"chooser", to_string(m.chooser)},
                         {"value", m.value ? "T" : "F"},
                         {"rule", to_string(m.rule)}});
    return json{{"seed", t.seed},
                {"n", config.rows},
                {"m", config.cols},
                {"c", config.colors},
                {"prover", to_string(config.prover)},
                {"moves", std::move(moves)},
                {"prover_false", t.prover_false},
                {"prover_true", t.prover_true},
                {"points", points_decimal(t, config.params, digits)},
                {"end", to_string(t.end)},
                {"end_clause", t.end_clause}}
        .dump();
}

} // namespace gridcolor
