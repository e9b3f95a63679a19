/// Resource bounds applied by the exact routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of big-integer entries a single row may hold.
    pub max_row_entries: u64,
    /// Largest number of search nodes the multinomial-sum oracle may visit.
    pub max_oracle_work: u64,
    /// Largest number of tuples `enumerate_compositions` may return.
    pub max_enumerated: u64,
}

impl Limits {
    pub const DEFAULT: Limits =
        Limits { max_row_entries: 10_000_000, max_oracle_work: 50_000_000, max_enumerated: 1_000_000 };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
