use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("`{word}` is not a valid representation in {system}")]
    InvalidRepresentation { word: String, system: String },

    #[error("value does not fit in 64 bits")]
    Overflow,

    #[error("digit {digit} is outside the automaton's input alphabet of size {size}")]
    DigitOutOfAlphabet { digit: u8, size: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("morphism is not prolongable on letter {letter}")]
    NotProlongable { letter: u8 },

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),

    #[error("prefix of length {required} needed, but the cap is {cap}")]
    PrefixTooLarge { required: usize, cap: usize },
}
