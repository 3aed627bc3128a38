use std::fmt;

use crate::weight::Weight;

/// One reduction or formula applied by the dispatcher. Indices are 0-based
/// and refer to the simple roots of the system the query was posed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceKind {
    WeylConjugate {
        word: Vec<usize>,
    },
    ZeroByDominance,
    HighestWeight,
    LeviRestrict {
        indices: Vec<usize>,
    },
    /// `from`/`to` are in the coordinates of the subsystem on `system`.
    LowerWeight {
        system: Vec<usize>,
        from: Weight,
        to: Weight,
        lowered: Vec<usize>,
    },
    TypeAClosed {
        support: Vec<usize>,
    },
    FastFreudenthal {
        j: usize,
    },
    ClassicalFreudenthal,
}

impl TraceKind {
    pub fn tag(&self) -> &'static str {
        match self {
            TraceKind::WeylConjugate { .. } => "WeylConjugate",
            TraceKind::ZeroByDominance => "ZeroByDominance",
            TraceKind::HighestWeight => "HighestWeight",
            TraceKind::LeviRestrict { .. } => "LeviRestrict",
            TraceKind::LowerWeight { .. } => "LowerWeight",
            TraceKind::TypeAClosed { .. } => "TypeAClosed",
            TraceKind::FastFreudenthal { .. } => "FastFreudenthal",
            TraceKind::ClassicalFreudenthal => "ClassicalFreudenthal",
        }
    }
}

fn one_based(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for TraceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceKind::WeylConjugate { word } => {
                let w: Vec<String> = word.iter().map(|i| format!("s{}", i + 1)).collect();
                if w.is_empty() {
                    write!(f, "WeylConjugate(id)")
                } else {
                    write!(f, "WeylConjugate({})", w.join(" "))
                }
            }
            TraceKind::LeviRestrict { indices } => {
                write!(f, "LeviRestrict({})", one_based(indices))
            }
            TraceKind::LowerWeight {
                system,
                from,
                to,
                lowered,
            } => {
                let lowered: Vec<usize> = lowered.iter().map(|&k| system[k]).collect();
                write!(f, "LowerWeight({from} -> {to} on {})", one_based(&lowered))
            }
            TraceKind::TypeAClosed { support } => {
                write!(f, "TypeAClosed(I={})", one_based(support))
            }
            TraceKind::FastFreudenthal { j } => write!(f, "FastFreudenthal(j={})", j + 1),
            other => write!(f, "{}", other.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Recursion depth of the sub-query that recorded the step; 0 is the
    /// original query.
    pub depth: usize,
    pub kind: TraceKind,
}

/// Ordered record of what the dispatcher did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub(crate) fn push(&mut self, depth: usize, kind: TraceKind) {
        self.steps.push(TraceStep { depth, kind });
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn top_level(&self) -> impl Iterator<Item = &TraceStep> {
        self.steps.iter().filter(|s| s.depth == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.top_level().map(|s| s.kind.to_string()).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}
