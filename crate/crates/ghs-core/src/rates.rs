//! Predicted near-η* behaviour of the integral terms and of u_x∘γ at the
//! blow-up locations, keyed by the multiplicity of the earliest root and the
//! parameter λ. Values follow the power-law convention
//! `quantity ~ (η* − η)^exponent`, with `Log` marking logarithmic divergence
//! and `Bounded` a finite nonzero limit.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Behavior {
    Power(f64),
    Log,
    Bounded,
}

impl Behavior {
    pub fn exponent(&self) -> Option<f64> {
        match self {
            Behavior::Power(p) => Some(*p),
            _ => None,
        }
    }

    pub fn diverges(&self) -> bool {
        match self {
            Behavior::Power(p) => *p < 0.0,
            Behavior::Log => true,
            Behavior::Bounded => false,
        }
    }
}

/// Near-η* behaviour of P̄₀, of the companion integral, and of u_x∘γ(ᾱ).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RatePrediction {
    pub pbar0: Behavior,
    pub i2: Behavior,
    pub ux_at_abar: Behavior,
}

/// Single-multiplicity earliest root (quadratic contact of g₁ at ᾱ).
pub fn single_root(lambda: f64) -> RatePrediction {
    let pbar0 = if lambda > 0.0 && lambda < 1.0 {
        Behavior::Power(0.5 - 0.5 / lambda)
    } else if lambda == 1.0 {
        Behavior::Log
    } else {
        Behavior::Bounded
    };
    let i2 = if lambda > 0.0 {
        Behavior::Power(-0.5 * (1.0 + 1.0 / lambda))
    } else if lambda == -1.0 {
        Behavior::Log
    } else if lambda < -1.0 {
        Behavior::Power(-0.5 * (1.0 + 1.0 / lambda))
    } else {
        Behavior::Bounded
    };
    let ux_at_abar = if lambda > 0.0 && lambda < 1.0 {
        Behavior::Power(-lambda)
    } else {
        Behavior::Power(-1.0)
    };
    RatePrediction { pbar0, i2, ux_at_abar }
}

/// Double-multiplicity earliest root (ρ₀ vanishes at ᾱ); identical tables
/// apply to the λκ < 0 blow-up branch, whose root is always double.
pub fn double_root(lambda: f64) -> RatePrediction {
    let pbar0 = if lambda > 0.0 && lambda < 2.0 {
        Behavior::Power(0.5 - 1.0 / lambda)
    } else if lambda == 2.0 {
        Behavior::Log
    } else {
        Behavior::Bounded
    };
    let i2 = if lambda > 0.0 {
        Behavior::Power(-(0.5 + 1.0 / lambda))
    } else if lambda == -2.0 {
        Behavior::Log
    } else if lambda < -2.0 {
        Behavior::Power(-(0.5 + 1.0 / lambda))
    } else {
        Behavior::Bounded
    };
    let ux_at_abar = if lambda > 0.0 && lambda < 2.0 {
        Behavior::Power(1.0 - lambda)
    } else {
        Behavior::Power(-1.0)
    };
    RatePrediction { pbar0, i2, ux_at_abar }
}

/// λκ < 0 with Q never vanishing: large-η power laws P̄₀ ~ 𝓜 η^(−1/λ) and
/// i2 ~ −𝓜 η^(−1−1/λ).
pub fn steady_large_eta(lambda: f64) -> RatePrediction {
    RatePrediction {
        pbar0: Behavior::Power(-1.0 / lambda),
        i2: Behavior::Power(-(1.0 + 1.0 / lambda)),
        ux_at_abar: Behavior::Bounded,
    }
}

/// Exponent of dt/dη = P̄₀^{2λ} as η ↑ η*, used for the terminal-time tail.
pub fn time_integrand_tail(lambda: f64, pbar0: Behavior) -> Behavior {
    match pbar0 {
        Behavior::Power(p) => Behavior::Power(2.0 * lambda * p),
        // (ln ε)^{2λ} is o(ε^{-δ}) for every δ > 0; treat as bounded for
        // integrability decisions (the log-power integral always converges).
        Behavior::Log => Behavior::Log,
        Behavior::Bounded => Behavior::Bounded,
    }
}
