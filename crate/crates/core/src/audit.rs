//! Counting ±γ-moves on obtuse tilings.

use serde::{Deserialize, Serialize};

use crate::angles::TriangleAngles;
use crate::error::{Error, Result};
use crate::moves::MoveKind;
use crate::scalar::Real;
use crate::trajectory::{Classification, Trajectory};

/// Where τ sits relative to the obtuse angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum TauBand {
    /// `τ > 2γ`
    Upper,
    /// `2α + 2β < τ < 2γ`
    Central,
    /// `τ < 2α + 2β`, the mirror image of `Upper`.
    Lower,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GammaAudit {
    pub band: TauBand,
    pub gamma_moves: usize,
    pub neg_gamma_moves: usize,
    pub period: Option<usize>,
    pub passed: bool,
}

/// Counts ±γ-moves of a trajectory on an obtuse tiling and checks them
/// against the band τ lies in.
///
/// In the upper band there are no −γ-moves, and a periodic trajectory makes
/// exactly one γ-move per period. The lower band is the same statement with
/// the sign flipped. The central band has no γ-moves of either sign.
pub fn gamma_move_audit<F: Real>(trajectory: &Trajectory<F>, angles: &TriangleAngles<F>) -> Result<GammaAudit> {
    if !angles.is_obtuse() {
        return Err(Error::PreconditionNotMet("the tiling is not obtuse".into()));
    }
    let tau = trajectory.seed.state.tau;
    let two = F::of(2.0);
    let band = if tau > two * angles.gamma() {
        TauBand::Upper
    } else if tau < two * (angles.alpha() + angles.beta()) {
        TauBand::Lower
    } else {
        TauBand::Central
    };

    let period = trajectory.verdict.period().filter(|_| matches!(trajectory.verdict, Classification::Periodic { .. }));
    let moves = match period {
        Some(p) => &trajectory.moves[..p / 2],
        None => &trajectory.moves[..],
    };
    let count = |sign: i8| moves.iter().filter(|m| m.kind == MoveKind::Gamma && m.sign == sign).count();
    let (gamma_moves, neg_gamma_moves) = (count(1), count(-1));

    let (wanted, unwanted) = match band {
        TauBand::Upper => (gamma_moves, neg_gamma_moves),
        TauBand::Lower => (neg_gamma_moves, gamma_moves),
        TauBand::Central => (0, gamma_moves + neg_gamma_moves),
    };
    let passed = unwanted == 0 && (period.is_none() || band == TauBand::Central || wanted == 1);
    Ok(GammaAudit { band, gamma_moves, neg_gamma_moves, period, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ChordState, TilingModel, TriangleCoord};
    use crate::trajectory::trace;
    use std::f64::consts::PI;

    fn obtuse() -> TilingModel<f64> {
        TilingModel::new(TriangleAngles::new(0.3, 0.5, PI - 0.8).unwrap())
    }

    fn first_periodic(tiling: &TilingModel<f64>, tau: f64) -> Trajectory<f64> {
        (1..200)
            .map(|k| ChordState::new(k as f64 * 0.0317, tau))
            .filter(|s| s.is_allowed(tiling.angles()) && !s.touches_vertex(tiling.angles()))
            .filter_map(|s| trace(tiling, TriangleCoord::ORIGIN, s, 5000).ok())
            .find(|t| t.verdict.is_periodic())
            .unwrap()
    }

    #[test]
    fn upper_band_has_one_gamma_move_per_period() {
        let tiling = obtuse();
        let t = first_periodic(&tiling, 2.0 * (PI - 0.8) + 0.2);
        let audit = gamma_move_audit(&t, tiling.angles()).unwrap();
        assert_eq!(audit.band, TauBand::Upper);
        assert_eq!((audit.gamma_moves, audit.neg_gamma_moves), (1, 0));
        assert!(audit.passed);
    }

    #[test]
    fn lower_band_is_mirrored() {
        let tiling = obtuse();
        let t = first_periodic(&tiling, 1.0);
        let audit = gamma_move_audit(&t, tiling.angles()).unwrap();
        assert_eq!(audit.band, TauBand::Lower);
        assert_eq!((audit.gamma_moves, audit.neg_gamma_moves), (0, 1));
        assert!(audit.passed);
    }

    #[test]
    fn central_band_has_no_gamma_moves() {
        let tiling = obtuse();
        let t = trace(&tiling, TriangleCoord::ORIGIN, ChordState::new(5.0, 3.0), 2000).unwrap();
        let audit = gamma_move_audit(&t, tiling.angles()).unwrap();
        assert_eq!(audit.band, TauBand::Central);
        assert_eq!((audit.gamma_moves, audit.neg_gamma_moves), (0, 0));
    }

    #[test]
    fn acute_tiling_is_rejected() {
        let tiling = TilingModel::new(TriangleAngles::equilateral());
        let t = trace(&tiling, TriangleCoord::ORIGIN, ChordState::new(0.4, 2.9), 100).unwrap();
        assert!(matches!(gamma_move_audit(&t, tiling.angles()), Err(Error::PreconditionNotMet(_))));
    }
}
