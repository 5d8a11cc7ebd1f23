use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(char),
    #[error("alphabet mismatch: rank {left} vs rank {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("rank must be between 1 and 26, got {0}")]
    InvalidRank(usize),
    #[error("operation requires a nontrivial word")]
    TrivialWord,
    #[error("{0}")]
    InvalidMorphism(String),
    #[error("supplied inverse does not invert the automorphism (fails on generator {0:?})")]
    NotInverse(String),
    #[error("invalid boundary point: {0}")]
    InvalidBoundaryPoint(String),
    #[error("invalid biinfinite word: {0}")]
    InvalidBiinfinite(String),
    #[error("boundary points coincide")]
    EqualBoundaryPoints,
    #[error("product {0}·{1} is not reduced")]
    NotReducedProduct(String, String),
    #[error("seed set contains no nontrivial word")]
    EmptySeed,
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("horizon exhausted: chopping {chop} from both ends of horizon {horizon}")]
    HorizonExhausted { horizon: usize, chop: usize },
    #[error("horizon too small: need {needed}, have {available}")]
    HorizonTooSmall { needed: usize, available: usize },
    #[error("language is not flagged exact")]
    NotExact,
    #[error("substitution is not prolongable on {0:?}")]
    NotProlongable(String),
    #[error("substitution image of {0:?} is not a positive word")]
    NonPositiveImage(String),
    #[error("substitution iterate exceeded {0} letters before its factors stabilized")]
    IterationBudget(usize),
    #[error("gap bound not witnessed within horizon {horizon} for length {length}")]
    GapNotWitnessed { length: usize, horizon: usize },
    #[error("anchor word {0:?} occurs in neither block (horizon too small)")]
    AnchorNotFound(String),
    #[error("approximant {0:?} fails its certification")]
    ApproximantRejected(String),
    #[error("chop sequence did not stabilize by depth {0}")]
    NoStabilization(usize),
    #[error("recomputation from horizon {shallow} disagrees with horizon {deep}")]
    InconsistentRecomputation { shallow: usize, deep: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}
