use thiserror::Error;

/// Errors produced by design, synthesis, and simulation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite entries in {0}")]
    NonFinite(String),

    #[error("ill-defined relative degree for limited output {output}: all Markov parameters up to order {max_order} vanish")]
    IllDefinedRelativeDegree { output: usize, max_order: usize },

    #[error("H_pi is singular or near-singular (condition number {cond:.3e})")]
    HPiSingular { cond: f64 },

    #[error("Riccati solve failed: {0}")]
    Riccati(String),

    #[error("observer matrix A - LC is not Hurwitz (max Re eigenvalue = {max_re:.6e})")]
    ObserverNotHurwitz { max_re: f64 },

    #[error("CBF parameter rule violated: lambda_max + alpha* = {value:.6e} must be negative")]
    ParameterRule { value: f64 },

    #[error("numerical blow-up at t = {t} s")]
    BlowUp { t: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
