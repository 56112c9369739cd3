#pragma once

namespace twrelay {

// Which composite ratio a Z-family quantity refers to:
//   z12: Z = g1*g2 / (g1 + 2*g2)   (paired with beta1 = 2/gbar1 + 1/gbar2)
//   z21: Z = g1*g2 / (g2 + 2*g1)   (paired with beta2 = 2/gbar2 + 1/gbar1)
enum class ZOrdering { z12, z21 };

// Typeset-vs-derived disambiguation switches for the T density.  The
// resolved settings are selected by the normalization and goodness-of-fit
// oracles; the printed candidates are kept callable so the selection is
// demonstrable, not hard-coded.
enum class TIndexConvention {
    shifted,  // series orders n in {0, 1} (resolved)
    printed   // series orders n in {1, 2} as typeset
};

enum class ZetaForm {
    sqrt_mean,    // zeta/eta built from 2/sqrt(gbar1*gbar2) (resolved)
    product_mean  // zeta/eta built from 2/(gbar1*gbar2) as typeset
};

// All constants derived from the three mean link SNRs gbar_i = 2*rho*Omega_i
// that the composite-SNR densities and the closed-form rate terms consume.
struct DensityParams {
    double gbar0;
    double gbar1;
    double gbar2;

    // Z-density constants.
    double alpha_z;  // 2*sqrt(2/(gbar1*gbar2))
    double beta1;        // 2/gbar1 + 1/gbar2
    double beta2;        // 2/gbar2 + 1/gbar1

    // Constants of the harmonic-mean variable W and the ratio variable T.
    double alpha_w;  // 2/sqrt(gbar1*gbar2)
    double beta_w;   // 1/gbar1 + 1/gbar2
    double varpi0;   // alpha_w^2 / gbar0
    double varpi1;   // alpha_w*beta_w / gbar0
    double zeta;     // gbar0*(beta_w + alpha_w)    [resolved form]
    double eta;      // gbar0*(beta_w - alpha_w)    [resolved form]
    double zeta_printed;  // gbar0*(beta_w + 2/(gbar1*gbar2))
    double eta_printed;   // gbar0*(beta_w - 2/(gbar1*gbar2))
    double xi0;      // series weight, order-0 term (resolved convention)
    double xi1;      // series weight, order-1 term (resolved convention)

    // Throws parameter_error unless all three means are positive and finite.
    DensityParams(double gbar0_in, double gbar1_in, double gbar2_in);

    double beta(ZOrdering ordering) const {
        return ordering == ZOrdering::z12 ? beta1 : beta2;
    }
    // Kernel weights A_0 = alpha^2, A_1 = alpha*beta_k.
    double a_weight(int v, ZOrdering ordering) const;
};

// Density of Z = g_i*g_j/(g_i + 2*g_j) for independent exponential g's:
// alpha*z*exp(-beta*z)*[alpha*K0(alpha*z) + beta*K1(alpha*z)].
double pdf_Z(double z, const DensityParams& params, ZOrdering ordering);

// Distribution function 1 - alpha*z*exp(-beta*z)*K1(alpha*z), clamped to
// [0, 1]; defined (equal to 0) at z = 0.
double cdf_Z(double z, const DensityParams& params, ZOrdering ordering);

// E[exp(-s*scale/g)] for exponential g with mean gbar:
// 2*sqrt(scale*s/gbar)*K1(2*sqrt(scale*s/gbar)); equals 1 at s = 0.
double mgf_inverse_gamma(double s, double gbar, double scale);

// Density of the harmonic-mean-type variable W = g1*g2/(g1 + g2).
double pdf_W(double w, const DensityParams& params);

// Density of T = g0*(g1 + g2)/(g1*g2): a two-term series of algebraic
// kernels times Gauss 2F1 factors.  The convention switches select between
// the resolved reading and the literal typeset one (see enum comments).
double pdf_T(double t, const DensityParams& params,
             TIndexConvention convention = TIndexConvention::shifted,
             ZetaForm form = ZetaForm::sqrt_mean);

}  // namespace twrelay
