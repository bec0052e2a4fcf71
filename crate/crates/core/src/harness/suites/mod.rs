//! The suite registry.

mod appendix;
mod equivalence;
mod ideals;
mod properties;
mod spectra;

use super::{Case, SuiteOptions};
use crate::Result;

pub(crate) type Build = fn(&SuiteOptions) -> Result<(Vec<Case>, Vec<String>)>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub(crate) build: Build,
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "tree-snf",
        description: "SNF of tree distance matrices is (1,1,2,...,2,2n)",
        build: spectra::tree_snf,
    },
    Suite {
        name: "graham-pollak",
        description: "det D(T) = (-1)^n n 2^(n-1) for trees on n+1 vertices",
        build: spectra::graham_pollak,
    },
    Suite {
        name: "bipartite-parity",
        description: "every 3-minor of D(G) is even for connected bipartite G",
        build: spectra::bipartite_parity,
    },
    Suite {
        name: "bipartite-delta3",
        description: "Delta_3(D(G)) = 2 for connected bipartite G on >= 4 vertices, except K_{2,2}",
        build: spectra::bipartite_delta3,
    },
    Suite {
        name: "evaluated-snf",
        description: "evaluated Smith forms of K_{p,q,r}, K_{n-p,1,...,1}, Psi and Omega",
        build: spectra::evaluated_snf_suite,
    },
    Suite {
        name: "appendix-code1",
        description: "P5 and its eight distance-reduced variants have trivial I3 over Q",
        build: appendix::code1,
    },
    Suite { name: "appendix-code2", description: "H1-H4 and K_{2,2,2} have trivial I3 over Q", build: appendix::code2 },
    Suite { name: "appendix-code3", description: "grouped I3 over Q of K_{1,n,m}", build: appendix::code3 },
    Suite { name: "appendix-code4", description: "grouped I3 over Q of P3^(+,-,0) blow-ups", build: appendix::code4 },
    Suite { name: "appendix-code5", description: "grouped I3 over Q of P3^(+,0,+) blow-ups", build: appendix::code5 },
    Suite { name: "appendix-code6", description: "grouped I3 over Q of P3^(+,0,-) blow-ups", build: appendix::code6 },
    Suite { name: "appendix-code7", description: "grouped I3 over Q of P4^(0,+,0,0) blow-ups", build: appendix::code7 },
    Suite { name: "appendix-code8", description: "grouped I3 over Q of P4^(+,0,0,0) blow-ups", build: appendix::code8 },
    Suite {
        name: "knm",
        description: "I3 over Q of K_{n,m} is <x_i - 2> for n,m in [3,5], and the K_{2,2} basis",
        build: ideals::knm,
    },
    Suite { name: "univariate", description: "I3 over Z[t] of C5 and K3", build: ideals::univariate },
    Suite {
        name: "lambda2Z-equivalence",
        description: "forbidden-subgraph, structural and direct verdicts for Lambda2^Z agree",
        build: equivalence::lambda2_z,
    },
    Suite {
        name: "classifier-properties",
        description: "containments, hereditary forbidden test, and C5 membership",
        build: equivalence::classifier_properties,
    },
    Suite {
        name: "lambda2Q-direct",
        description: "structural Lambda2^Q verdicts against the ideals",
        build: equivalence::lambda2_q_direct,
    },
    Suite {
        name: "lambda2tZ-direct",
        description: "structural Lambda2^{t,Z} verdicts against the ideals",
        build: equivalence::lambda2_tz_direct,
    },
    Suite {
        name: "lambda2tQ-direct",
        description: "structural Lambda2^{t,Q} verdicts against the ideals",
        build: equivalence::lambda2_tq_direct,
    },
    Suite {
        name: "eval-gcd",
        description: "evaluating I_k over Z gives <Delta_k> of the evaluated matrix",
        build: properties::eval_gcd,
    },
    Suite {
        name: "snf-invariance",
        description: "invariant factors survive unimodular transformations",
        build: properties::snf_invariance,
    },
    Suite {
        name: "induced-monotone",
        description: "I_i(H) is contained in I_i(G) for induced H of diameter at most 2",
        build: properties::induced_monotone,
    },
    Suite {
        name: "phi-bounds",
        description: "Phi over Z is at most Phi over Q and at most phi of any evaluation",
        build: properties::phi_bounds,
    },
];
