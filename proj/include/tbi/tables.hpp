#pragma once

// Published reference values for the polynomial integrals (set I) and the
// order-0/1 Bessel integrals (set II), all at alpha=2.35, beta=1.41,
// |gamma|=0.567 with l=2, n=1.  Shared by the CLI `table` subcommand and the
// regression suites.  Set II's row (k=5, V=1.50) duplicates (k=5, V=1.00) in
// the published source; the tests recompute both and record the corrected
// pair rather than asserting the suspect row.

namespace tbi::tables {

inline constexpr double kAlpha = 2.35;
inline constexpr double kBeta = 1.41;
inline constexpr double kGammaAbs = 0.567;
inline constexpr int kL = 2;
inline constexpr int kN = 1;

struct GammaRow {
    int k;
    double positive_gamma;  // published value at gamma = +0.567
    double negative_gamma;  // published value at gamma = -0.567
};

inline constexpr GammaRow kGammaTable[10] = {
    {0, 0.132484880489827E+00, 0.484535355001714E+01},
    {1, 0.105479781157007E+00, 0.462617958966529E+01},
    {2, 0.123759737118974E+00, 0.683620356276100E+01},
    {3, 0.190628938378487E+00, 0.138242778966704E+02},
    {4, 0.362095286177389E+00, 0.356816617385975E+02},
    {5, 0.815657409095427E+00, 0.112342033402992E+03},
    {6, 0.212162348108085E+01, 0.417926993577783E+03},
    {7, 0.625059393550668E+01, 0.179435469496013E+04},
    {8, 0.205551903374530E+02, 0.873301210942717E+04},
    {9, 0.745934650018583E+02, 0.475056243580342E+05},
};

struct BesselRow {
    int k;
    double V;
    double b0;
    double b1;
    bool suspect;  // the published duplicate row
};

inline constexpr BesselRow kBesselTable[10] = {
    {3, 0.25, 0.18233241643012516E+00, 0.290930992106451E-01, false},
    {5, 0.25, 0.75291471135429875E+00, 0.166432412830887E+00, false},
    {3, 0.50, 0.15968050735256670E+00, 0.522255954684081E-01, false},
    {5, 0.50, 0.59041249572520414E+00, 0.278021233893212E+00, false},
    {3, 1.00, 0.94868174980045456E-01, 0.691516883096556E-01, false},
    {5, 1.00, 0.20605506256710767E+00, 0.274928833359198E+00, false},
    {3, 1.50, 0.40374337963233781E-01, 0.554457473644749E-01, false},
    {5, 1.50, 0.20605506256710767E+00, 0.274928833359198E+00, true},
    {3, 2.00, 0.11173049407361310E-01, 0.340384106321226E-01, false},
    {5, 2.00, -0.35522376544132919E-01, 0.316198754574614E-01, false},
};

}  // namespace tbi::tables
