#pragma once

// Prover-Delayer game on the grid colorability CNF.

#include <gridcolor/encode.hpp>
#include <gridcolor/grid.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridcolor {

enum class Chooser
{
    Prover,
    Delayer
};

enum class MoveRule
{
    RectBlock, ///< Delayer sets F: T would complete a forbidden set
    PanicT,    ///< Delayer sets T: the cell is running out of colors
    Defer      ///< Prover picks the value; Delayer scores
};

enum class EndKind
{
    ColorClause, ///< some cell has every color variable false
    RectClause,  ///< some forbidden set is monochromatic
    Exhausted    ///< every variable set, no clause false (satisfiable formula)
};

enum class ProverKind
{
    Random,
    CellFocus,
    Minimax
};

std::string to_string(Chooser chooser);
std::string to_string(MoveRule rule);
std::string to_string(EndKind kind);
std::string to_string(ProverKind kind);
std::optional<ProverKind> parse_prover(const std::string &name);

/// Delayer strategy and bound-calculator parameters.
struct DelayerParams
{
    std::string a = "2.793200"; ///< decimal string, parsed at full precision
    double r = 0.9;
    double q = 0.56415;
    double s = 1.30754;
    double D = 0.836;
    /// Coefficient of the c^2 term in the analytic bound.
    double coefficient = 0.00009;
};

struct GameConfig
{
    int rows = 1, cols = 1, colors = 1;
    ShapeFamily family = ShapeFamily::rectangle();
    DelayerParams params;
    ProverKind prover = ProverKind::Random;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for a <= 1, r outside (0,1) or bad sizes.
void check_config(const GameConfig &config);

struct Move
{
    int var = 0;
    GridVariables::Triple at{};
    Chooser chooser = Chooser::Prover;
    bool value = false;
    MoveRule rule = MoveRule::Defer;

    friend bool operator==(const Move &, const Move &) = default;
};

struct GameTranscript
{
    std::vector<Move> moves;
    std::uint64_t prover_false = 0; ///< deferred moves the Prover set F (lg a each)
    std::uint64_t prover_true = 0;  ///< deferred moves the Prover set T (lg b each)
    EndKind end = EndKind::Exhausted;
    std::size_t end_clause = 0;     ///< index into the CNF's clause list
    std::uint64_t seed = 0;
};

/// lg a and lg b = lg(a/(a-1)) as decimal strings with `digits` significant digits.
std::string lg_a_decimal(const DelayerParams &params, int digits);
std::string lg_b_decimal(const DelayerParams &params, int digits);
/// |1/a + 1/b - 1| evaluated at high precision.
double reciprocal_identity_error(const DelayerParams &params);

/// Delayer points prover_false*lg a + prover_true*lg b.
std::string points_decimal(const GameTranscript &t, const DelayerParams &params, int digits);
double points(const GameTranscript &t, const DelayerParams &params);
/// Decimal precision from GRIDCOLOR_PRECISION (default 40, clamped to [20, 1000]).
int default_precision();

class GameState
{
public:
    explicit GameState(const GameConfig &config);

    const GridCnf &cnf() const noexcept { return cnf_; }
    int var_count() const noexcept { return cnf_.cnf.var_count; }

    enum class Value : std::uint8_t
    {
        Unset,
        True,
        ProverFalse,
        DelayerFalse
    };

    Value value(int var) const { return values_.at(static_cast<std::size_t>(var)); }
    const std::vector<Value> &values() const noexcept { return values_; }
    void set_values(std::vector<Value> values);

    /// The Delayer's response to the Prover choosing `var`.
    struct Response
    {
        MoveRule rule;
        bool value; ///< meaningful unless rule is Defer
    };
    Response delayer_response(int var) const;

    /// Records a value; returns the first falsified clause among those
    /// containing var, if any.
    std::optional<std::size_t> set(int var, bool value, bool by_prover);
    void unset(int var);

    bool is_color_clause(std::size_t clause) const noexcept { return cnf_.is_color_clause(clause); }
    bool would_complete(int var) const;
    std::size_t prover_false_in_cell(int var) const;
    bool cell_has_true(int var) const;

private:
    GameConfig config_;
    GridCnf cnf_;
    std::vector<Value> values_;
    std::vector<std::vector<std::size_t>> clauses_of_;
    std::size_t panic_threshold_ = 0;
};

/// One full game from the empty assignment.
GameTranscript play(const GameConfig &config);

/// Games for seeds config.seed, config.seed+1, ...; ordered by seed whatever `jobs` is.
std::vector<GameTranscript> play_many(const GameConfig &config, std::size_t games, std::size_t jobs = 1);

/// Minimum final points the Prover can force against the Delayer strategy,
/// over all Prover choices. Exhaustive; at most 20 variables.
double minimax_value(const GameConfig &config);

/// Recomputes (prover F, prover T) from the move list.
std::pair<std::uint64_t, std::uint64_t> recount(const GameTranscript &t);

struct BoundReport
{
    int c = 0;
    double term_fraction_a = 0; ///< q*c*lg a
    double term_fraction_b = 0; ///< s*c*lg b
    double term_quadratic = 0;  ///< coefficient*c^2
    double bound = 0;           ///< min of the three
    double derived_coefficient = 0; ///< (3-3q-s)*r
    double bound_derived = 0;       ///< min with the derived coefficient
    double target = 0;              ///< D*c
    bool meets_target = false;      ///< bound >= target
    bool meets_target_derived = false;
};

/// min(q c lg a, s c lg b, coefficient c^2).
double analytic_point_bound(int c, const DelayerParams &params);
BoundReport bound_report(int c, const DelayerParams &params);

/// "size ≥ 2^p = v" for small p, "size ≥ 2^p" otherwise, "size ≥ 1" for p = 0.
std::string report_tree_res_bound(double p);
/// "size ≥ 2^{<D>c}".
std::string report_tree_res_bound_symbolic(double D);

std::string transcript_json(const GameTranscript &t, const GameConfig &config, int digits);

} // namespace gridcolor
