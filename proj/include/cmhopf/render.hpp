#ifndef CMHOPF_RENDER_HPP
#define CMHOPF_RENDER_HPP

#include <span>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "hopf.hpp"
#include "series.hpp"

namespace cmhopf {

struct TableRow {
  Composition sequence;
  Rational    value;
};

// Ordered coefficients of weight n, sorted by table_order_less. The family
// picks the formula: delta and gamma share one table, a has its own.
std::vector<TableRow> coproduct_table(int n, Family family = Family::delta);
std::vector<TableRow> antipode_table(int n, Family family = Family::delta);

// "(1,2,2) = 25/2", with U+2212 for a negative sign.
std::string render_row(TableRow const& row);
std::string render_rows(std::vector<TableRow> const& rows);

// Reduced coproduct grouped by right leg, e.g.
// "Δ̃Γ₃ = (Γ₂ + Γ₁²) ⊗ Γ₁ + 3Γ₁ ⊗ Γ₂".
std::string reduced_coproduct_display(TensorElement const& x, int n, std::string_view symbol);
std::string reduced_coproduct_display(int n);

// "S(Γ₃) = −Γ₃ + 4Γ₁Γ₂ − 2Γ₁³"
std::string antipode_display(int n);

// Both tables for weights 1..max_degree followed by the displays.
std::string render_tables(int max_degree);

// "Δ(δ₂) = 1 ⊗ δ₂ + δ₁ ⊗ δ₁ + δ₂ ⊗ 1" and "S(δ₂) = −δ₂ + δ₁²".
std::string coproduct_text(TensorElement const& x, int n);
std::string antipode_text(AlgebraElement const& x, int n);

// "3x² − (1/2)x⁴"; "0" for the zero series.
std::string to_text(PowerSeries const& p);

// "φ₁ = −1" per coefficient, then "residual = ..." for u φ′ − φ.
std::string conjugacy_text(std::span<Rational const> u, int order, bool* residual_zero);

}  // namespace cmhopf

#endif  // CMHOPF_RENDER_HPP
