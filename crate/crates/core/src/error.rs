use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a semigroup must have at least one element")]
    EmptySemigroup,
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("entry {value} is out of range (must be < {bound})")]
    OutOfRange { value: usize, bound: usize },
    #[error("associativity fails at ({x}, {y}, {z})")]
    AssociativityViolation { x: usize, y: usize, z: usize },
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("action is not compatible at a = {a}, s = {s}, s' = {t}")]
    CompatibilityViolation { a: usize, s: usize, t: usize },
    #[error("left and right actions do not commute at s = {s}, a = {a}, t = {t}")]
    BiactCommutation { s: usize, a: usize, t: usize },
    #[error("map is not equivariant at a = {a}, s = {s}")]
    EquivarianceViolation { a: usize, s: usize },
    #[error("map has {found} entries, expected {expected}")]
    MapShape { expected: usize, found: usize },
    #[error("search space of {candidates} candidates exceeds the limit of {limit}")]
    SearchSpaceTooLarge { candidates: u64, limit: u64 },
    #[error("acts are over different semigroups")]
    SemigroupMismatch,
    #[error("map is not balanced at a = {a}, s = {s}, b = {b}")]
    NotBalanced { a: usize, s: usize, b: usize },
    #[error("map is not multiplicative at x = {x}, y = {y}")]
    MultiplicativityViolation { x: usize, y: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no preimage found for element {0}")]
    WitnessNotFound(usize),
    #[error("not well defined: {0}")]
    WellDefinednessViolation(String),
    #[error("pairing is not a biact morphism: {0}")]
    BiactLawViolation(String),
    #[error("Morita context is invalid: {0}")]
    ContextInvalid(String),
    #[error("semigroup is not factorizable (element {0} is not a product)")]
    NotFactorizable(usize),
    #[error("structural property violated: {0}")]
    TheoremViolation(String),
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
