use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{name}` must be non-negative, got {value}")]
    NegativeParameter { name: &'static str, value: i64 },

    /// `colorings` is `None` when `n^k` does not even fit in a `u64`.
    #[error("enumerating {} colorings exceeds the budget of {budget}", display_colorings(.colorings))]
    BudgetExceeded { colorings: Option<u64>, budget: u64 },

    #[error("color {color} is outside a palette of {palette} colors")]
    ColorOutOfRange { color: u32, palette: u32 },
}

fn display_colorings(colorings: &Option<u64>) -> String {
    match colorings {
        Some(c) => c.to_string(),
        None => "more than 2^64".to_string(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
