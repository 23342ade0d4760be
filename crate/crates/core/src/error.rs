use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("complexes are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("substitution needs {expected} parts, got {got}")]
    PartCountMismatch { expected: usize, got: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid group order {0} (expected an integer >= 2 or infinity)")]
    InvalidOrder(u64),
    #[error("orders list has length {got}, complex has {expected} vertices")]
    OrderCountMismatch { expected: usize, got: usize },
    #[error("elements belong to different group specifications")]
    SpecMismatch,
    #[error("all vertex orders must equal one prime p")]
    NonUniformOrders,
    #[error("polynomials live in different free algebras")]
    AlgebraMismatch,
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("series coefficient at degree {degree} is {value}, expected a nonnegative integer")]
    BadCoefficient { degree: usize, value: i128 },
    #[error("factorization at degree {degree} gives exponent {value}")]
    NegativeExponent { degree: usize, value: i128 },
    #[error("integer overflow in series arithmetic at degree {0}")]
    Overflow(usize),
    #[error("series must have constant term 1")]
    BadConstantTerm,
    #[error("the Hilbert formula only applies to presentations built from a complex")]
    NotAGraphProduct,
    #[error("word parse error: {0}")]
    WordParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
