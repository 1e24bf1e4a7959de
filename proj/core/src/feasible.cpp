#include "tilecheck/feasible.hpp"

#include "tilecheck/errors.hpp"

#include <stdexcept>

namespace tilecheck {

std::string to_string(const Rational& value)
{
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    auto is_integer = [](const std::string& s) {
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() <= start) return false;
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || Integer(den) == 0) {
        throw std::invalid_argument("not a fraction: '" + text + "'");
    }
    return Rational(Integer(num), Integer(den));
}

std::size_t LinearSystem::add_variable(std::string name)
{
    variables.push_back(std::move(name));
    return variables.size() - 1;
}

std::vector<Integer> LinearSystem::row(std::size_t equation) const
{
    std::vector<Integer> dense(variables.size());
    for (const auto& term : equations.at(equation)) {
        dense.at(term.variable) += term.coefficient;
    }
    return dense;
}

std::vector<std::string> LinearSystem::check() const
{
    std::vector<std::string> problems;
    for (std::size_t e = 0; e < equations.size(); ++e) {
        for (const auto& term : equations[e]) {
            if (term.variable >= variables.size()) {
                problems.push_back("equation " + std::to_string(e) + " references variable #" +
                                   std::to_string(term.variable));
            }
        }
    }
    return problems;
}

bool satisfies(const LinearSystem& system, const RationalVector& x)
{
    if (x.size() != system.variables.size() || x.empty()) return false;
    Rational total = 0;
    for (const auto& v : x) {
        if (v < 0) return false;
        total += v;
    }
    if (total == 0) return false;
    for (std::size_t e = 0; e < system.equations.size(); ++e) {
        Rational lhs = 0;
        for (const auto& term : system.equations[e]) lhs += x[term.variable] * term.coefficient;
        if (lhs != 0) return false;
    }
    return true;
}

bool certifies_infeasible(const LinearSystem& system, const RationalVector& y)
{
    if (y.size() != system.equations.size()) return false;
    std::vector<Rational> combined(system.variables.size());
    for (std::size_t e = 0; e < system.equations.size(); ++e) {
        for (const auto& term : system.equations[e]) {
            combined[term.variable] += y[e] * term.coefficient;
        }
    }
    for (const auto& c : combined) {
        if (c <= 0) return false;
    }
    return true;
}

namespace {

// Phase-one tableau for {Ax = 0, Σx = 1, x ≥ 0} with one artificial per row.
class PhaseOne {
public:
    explicit PhaseOne(const LinearSystem& system)
        : vars_(system.variables.size()),
          rows_(system.equations.size() + 1),
          cols_(vars_ + rows_),
          table_(rows_, std::vector<Rational>(cols_)),
          rhs_(rows_),
          basis_(rows_)
    {
        for (std::size_t r = 0; r + 1 < rows_; ++r) {
            auto dense = system.row(r);
            for (std::size_t j = 0; j < vars_; ++j) table_[r][j] = Rational(dense[j]);
        }
        for (std::size_t j = 0; j < vars_; ++j) table_[rows_ - 1][j] = 1;
        rhs_[rows_ - 1] = 1;
        for (std::size_t r = 0; r < rows_; ++r) {
            table_[r][vars_ + r] = 1;
            basis_[r] = vars_ + r;
        }
    }

    void solve()
    {
        while (true) {
            const auto entering = entering_column();
            if (!entering) return;
            pivot(leaving_row(*entering), *entering);
        }
    }

    Rational objective() const
    {
        Rational value = 0;
        for (std::size_t r = 0; r < rows_; ++r) value += cost(basis_[r]) * rhs_[r];
        return value;
    }

    RationalVector primal() const
    {
        RationalVector x(vars_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < vars_) x[basis_[r]] = rhs_[r];
        }
        return x;
    }

    // Simplex multipliers c_B B^{-1}; the artificial columns hold B^{-1}.
    RationalVector duals() const
    {
        RationalVector pi(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < rows_; ++k) pi[r] += cost(basis_[k]) * table_[k][vars_ + r];
        }
        return pi;
    }

private:
    Rational cost(std::size_t column) const { return column >= vars_ ? 1 : 0; }

    // Bland: lowest-index column with negative reduced cost.
    std::optional<std::size_t> entering_column() const
    {
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational reduced = cost(j);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!table_[r][j].is_zero()) reduced -= cost(basis_[r]) * table_[r][j];
            }
            if (reduced < 0) return j;
        }
        return std::nullopt;
    }

    // Minimum ratio; ties go to the lowest-index basic variable.
    std::size_t leaving_row(std::size_t column) const
    {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (table_[r][column] <= 0) continue;
            Rational ratio = rhs_[r] / table_[r][column];
            if (!best || ratio < best_ratio ||
                (ratio == best_ratio && basis_[r] < basis_[*best])) {
                best = r;
                best_ratio = ratio;
            }
        }
        // The phase-one objective is bounded below by zero.
        if (!best) throw VerificationFailed("phase-one simplex reported unbounded");
        return *best;
    }

    void pivot(std::size_t row, std::size_t column)
    {
        const Rational p = table_[row][column];
        for (auto& v : table_[row]) v /= p;
        rhs_[row] /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || table_[r][column].is_zero()) continue;
            const Rational factor = table_[r][column];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!table_[row][j].is_zero()) table_[r][j] -= factor * table_[row][j];
            }
            rhs_[r] -= factor * rhs_[row];
        }
        basis_[row] = column;
    }

    std::size_t vars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> table_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
};

} // namespace

Feasibility solve_nonneg_nontrivial(const LinearSystem& system)
{
    if (auto problems = system.check(); !problems.empty()) {
        throw std::invalid_argument(problems.front());
    }
    Feasibility result;
    const std::size_t m = system.equations.size();
    if (system.variables.empty()) {
        result.certificate = RationalVector(m);
        return result;
    }
    if (m == 0) {
        result.solution = RationalVector(system.variables.size(),
                                         Rational(1, static_cast<long long>(system.variables.size())));
        return result;
    }

    PhaseOne lp(system);
    lp.solve();
    if (lp.objective() == 0) {
        auto x = lp.primal();
        if (!satisfies(system, x)) {
            throw VerificationFailed("simplex solution fails exact substitution");
        }
        result.solution = std::move(x);
        return result;
    }
    const auto pi = lp.duals();
    RationalVector y(m);
    for (std::size_t r = 0; r < m; ++r) y[r] = -pi[r];
    if (!certifies_infeasible(system, y)) {
        throw VerificationFailed("dual certificate fails exact check");
    }
    result.certificate = std::move(y);
    return result;
}

std::vector<Integer> integer_scale(const RationalVector& x)
{
    Integer lcm = 1;
    for (const auto& v : x) {
        lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(v)));
    }
    std::vector<Integer> scaled;
    scaled.reserve(x.size());
    for (const auto& v : x) {
        scaled.push_back(boost::multiprecision::numerator(v) *
                         (lcm / boost::multiprecision::denominator(v)));
    }
    return scaled;
}

} // namespace tilecheck
