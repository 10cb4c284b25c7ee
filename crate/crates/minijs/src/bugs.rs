//! Planted bugs. Each is a deterministic assertion with its own id; the
//! `disarm` feature or the runtime flag turns all of them into no-ops.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u16)]
pub enum Bug {
    SyntaxAssign = 1,
    ConstRedef = 2,
    TrailingExpr = 3,
    GcShift = 4,
}

impl Bug {
    pub const ALL: [Bug; 4] = [Bug::SyntaxAssign, Bug::ConstRedef, Bug::TrailingExpr, Bug::GcShift];

    pub fn id(self) -> u16 {
        self as u16
    }

    pub fn from_id(id: u16) -> Option<Self> {
        Bug::ALL.into_iter().find(|b| b.id() == id)
    }

    pub fn name(self) -> &'static str {
        match self {
            Bug::SyntaxAssign => "BUG_SYNTAX_ASSIGN",
            Bug::ConstRedef => "BUG_CONST_REDEF",
            Bug::TrailingExpr => "BUG_TRAILING_EXPR",
            Bug::GcShift => "BUG_GC_SHIFT",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Bug::SyntaxAssign => {
                "object literal entry written `key = value` is accepted by the parser; \
                 the property's type tag is corrupt and fails its check when the literal is evaluated"
            }
            Bug::ConstRedef => {
                "`const` redeclaring a parameter or top-level binding of a function body \
                 takes an extra slot; the slot-count check fails when it executes"
            }
            Bug::TrailingExpr => {
                "a number literal directly after a call's argument list is accepted as an \
                 argument index; the bound check fails when the call runs with index >= argument count"
            }
            Bug::GcShift => {
                "eight or more alternating shift/unshift operations on one array \
                 trip the simulated free-list consistency check"
            }
        }
    }
}

/// Whether planted assertions can fire in this build and run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arming {
    armed: bool,
}

impl Arming {
    pub fn new(disarm_flag: bool) -> Self {
        Arming {
            armed: !cfg!(feature = "disarm") && !disarm_flag,
        }
    }

    #[inline]
    pub fn armed(self) -> bool {
        self.armed
    }
}

impl Default for Arming {
    fn default() -> Self {
        Arming::new(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_distinct() {
        for (i, b) in Bug::ALL.iter().enumerate() {
            assert_eq!(b.id() as usize, i + 1);
            assert_eq!(Bug::from_id(b.id()), Some(*b));
        }
        assert_eq!(Bug::from_id(0), None);
        assert_eq!(Bug::from_id(0xffff), None);
    }

    #[test]
    fn runtime_flag_disarms() {
        assert!(!Arming::new(true).armed());
        assert_eq!(Arming::new(false).armed(), !cfg!(feature = "disarm"));
    }
}
