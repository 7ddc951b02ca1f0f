#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stirperm/series.hpp"
#include "stirperm/word.hpp"

namespace stirperm {

/// f = C_213 - 1, the solution with zero constant term of
/// f = xp + x(pr+qr+pq) f + xqr(p+q+r) f^2 + x q^2 r^2 f^3.
TruncatedSeries solve_213(int order);
TruncatedSeries c213(int order);  // 1 + solve_213

/// f = q C_123 - q + 1, the solution with constant term 1 of
/// f = 1 + pqx(-1 + (2 + x(pr+qr-pq)) f - pqx(1 - x(p-r)(q-r)) f^2) f.
TruncatedSeries solve_123(int order);

/// f = q C_132 - q + 1, the solution with constant term 1 of
/// f = 1 + px(q - 2r + r(2 + (pr-pq+q^2)x) f - p r^2 x f^2) f.
TruncatedSeries solve_132(int order);

/// C = 1 + (f - 1)/q, coefficientwise; throws DivisibilityError when some
/// coefficient of f - 1 is not divisible by q.
TruncatedSeries recover_from_f(const TruncatedSeries& f);

TruncatedSeries c123(int order);
TruncatedSeries c132(int order);

/// Which weights the block decomposition uses for two nonempty blocks.
/// `exact` charges q^2 r for sigma' 1 sigma'' 1 (two descents and an ascent)
/// and matches enumeration; `printed` uses the published coefficients
/// (1 + p) and qr in place of (q + p) and q^2 r. Both agree at q = 1.
enum class ChainForm { exact, printed };

/// F_tau for tau = 1 (+) tau', given F_tau' (rational expression in F_tau').
TruncatedSeries avoid_pair_prepend1(const TruncatedSeries& f_sub, ChainForm form = ChainForm::exact);

/// F_tau for tau = 11 (+) tau', given F_tau'; the quadratic functional
/// equation is solved by fixed-point iteration from F_tau = 1.
TruncatedSeries avoid_pair_prepend11(const TruncatedSeries& f_sub, ChainForm form = ChainForm::exact);

enum class ChainPiece { one, pair };

/// A pattern built as piece_1 (+) piece_2 (+) ... (+) 11, pieces "1" or "11".
struct PatternChain {
    std::vector<ChainPiece> pieces;  // the last piece is always pair

    /// "1,1,11" or "11,11"; throws ParseError.
    static PatternChain parse(std::string_view text);
    Pattern pattern() const;
    std::string to_string() const;
};

/// F_tau for the chain's pattern: F_11 = 1, then prepend pieces right to left.
TruncatedSeries avoid_pair_chain(const PatternChain& chain, int order, ChainForm form = ChainForm::exact);

/// R(x,p,z) = 1 / (1 - x (R(x,pz,z) - 1 + p) R(x,pz^2,z)).
TruncatedSeries solve_r(int order);

/// Catalan series from C = 1 + x C^2.
TruncatedSeries catalan_series(int order);

/// Registered equation ids: "213", "123", "132", "R", "prepend1:<chain>",
/// "prepend11:<chain>", and "prepend1-printed:<chain>",
/// "prepend11-printed:<chain>" for ChainForm::printed. The chain spells the
/// whole pattern and must start with the prepended piece. 213/123/132 give
/// C_tau (not the auxiliary f).
/// Throws UnknownEquation.
TruncatedSeries solve_equation(std::string_view id, int order);

/// Variables the series of an equation id is expressed in.
std::vector<Var> equation_vars(std::string_view id);

}  // namespace stirperm
