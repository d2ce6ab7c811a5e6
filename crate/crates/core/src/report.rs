use alloc::string::String;
use alloc::vec::Vec;

/// One verified identity: its name, whether it held, and on failure the
/// first basis tuple where it did not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    /// Passes iff `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Check { name: name.into(), pass: witness.is_none(), witness }
    }

    /// A check with no meaningful tuple; a failure carries an empty witness.
    pub fn from_bool(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, witness: (!pass).then(Vec::new) }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
