//! Positive-secrecy predicates for the four ways a set of friendly nodes can
//! help: a lone transmitter, cooperative transmitting, one decode-and-forward
//! relay, or one jammer.
//!
//! The relay and jammer models are the simplest consistent instantiation:
//!
//! * best jammer: helper `j` radiates noise at `P_j`; secrecy holds when
//!   `SINR_r(j) > max_e SINR_e(j)` with
//!   `SINR_x(j) = P_t d_tx^-beta / (sigma^2 + P_j d_jx^-beta)`.
//! * best relay: secrecy holds when
//!   `min(C(t,j), C(j,r)) > max_e max(C(t,e), C(j,e))`; eavesdroppers hear
//!   both hops and no two-slot rate penalty is applied.
//!
//! Both also succeed whenever the direct link already has positive secrecy.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{distance, Point};
use crate::secrecy::{capacity_unchecked, covers, inside_disk, ChannelParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    Direct,
    CoopTransmit,
    BestRelay,
    BestJammer,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 4] = [
        StrategyKind::Direct,
        StrategyKind::CoopTransmit,
        StrategyKind::BestRelay,
        StrategyKind::BestJammer,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::Direct => "direct",
            StrategyKind::CoopTransmit => "coop-tx",
            StrategyKind::BestRelay => "best-relay",
            StrategyKind::BestJammer => "best-jammer",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyConfig {
    pub strategy: StrategyKind,
    pub channel: ChannelParams,
}

impl StrategyConfig {
    pub fn new(strategy: StrategyKind, channel: ChannelParams) -> Self {
        Self { strategy, channel }
    }

    /// Evaluates the configured strategy over one set of friendly nodes.
    /// No friendly nodes means no secrecy.
    pub fn positive_secrecy(&self, friendly: &[Point], eaves: &[Point], receiver: Point) -> bool {
        if self.strategy == StrategyKind::CoopTransmit {
            return eval_coop_transmit(friendly, eaves, receiver);
        }
        let Ok(roles) = assign_roles(friendly) else {
            return false;
        };
        match self.strategy {
            StrategyKind::Direct => eval_direct(&roles, eaves, receiver, self),
            StrategyKind::BestRelay => eval_best_relay(&roles, eaves, receiver, self),
            StrategyKind::BestJammer => eval_best_jammer(&roles, eaves, receiver, self),
            StrategyKind::CoopTransmit => unreachable!(),
        }
    }
}

/// Designated transmitter plus the helpers that may act as relay or jammer.
#[derive(Debug, Clone, PartialEq)]
pub struct FriendlyRoles {
    pub designated_tx: Point,
    pub helpers: Vec<Point>,
}

/// The first friendly node transmits; the rest are helpers.
pub fn assign_roles(friendly: &[Point]) -> Result<FriendlyRoles> {
    let (first, rest) = friendly
        .split_first()
        .ok_or(Error::EmptyInput("assign_roles: friendly nodes"))?;
    Ok(FriendlyRoles {
        designated_tx: *first,
        helpers: rest.to_vec(),
    })
}

pub fn eval_direct(
    roles: &FriendlyRoles,
    eaves: &[Point],
    receiver: Point,
    _cfg: &StrategyConfig,
) -> bool {
    inside_disk(roles.designated_tx, eaves, receiver)
}

pub fn eval_coop_transmit(friendly: &[Point], eaves: &[Point], receiver: Point) -> bool {
    covers(friendly, eaves, receiver)
}

/// SINR at `at` for the designated transmitter's signal with helper `jammer`
/// radiating noise. A jammer on top of the node drives its SINR to zero.
fn sinr(ch: &ChannelParams, tx: Point, jammer: Point, at: Point) -> f64 {
    let interference = ch.received(ch.jammer_power, distance(jammer, at));
    let denom = ch.noise_var + interference;
    if denom.is_infinite() {
        return 0.0;
    }
    ch.received(ch.power, distance(tx, at)) / denom
}

pub fn eval_best_jammer(
    roles: &FriendlyRoles,
    eaves: &[Point],
    receiver: Point,
    cfg: &StrategyConfig,
) -> bool {
    if eval_direct(roles, eaves, receiver, cfg) {
        return true;
    }
    let ch = &cfg.channel;
    let tx = roles.designated_tx;
    roles.helpers.iter().any(|&j| {
        let at_receiver = sinr(ch, tx, j, receiver);
        eaves.iter().all(|&e| at_receiver > sinr(ch, tx, j, e))
    })
}

pub fn eval_best_relay(
    roles: &FriendlyRoles,
    eaves: &[Point],
    receiver: Point,
    cfg: &StrategyConfig,
) -> bool {
    if eval_direct(roles, eaves, receiver, cfg) {
        return true;
    }
    let ch = &cfg.channel;
    let tx = roles.designated_tx;
    let cap = |a: Point, b: Point| capacity_unchecked(ch, distance(a, b));
    roles.helpers.iter().any(|&j| {
        let legit = cap(tx, j).min(cap(j, receiver));
        eaves.iter().all(|&e| legit > cap(tx, e).max(cap(j, e)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::secrecy::{covered, Deployment};
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn cfg(kind: StrategyKind, beta: f64) -> StrategyConfig {
        StrategyConfig::new(kind, ChannelParams::new(1.0, 1.0, beta, 1.0).unwrap())
    }

    fn roles(tx: Point, helpers: &[Point]) -> FriendlyRoles {
        FriendlyRoles {
            designated_tx: tx,
            helpers: helpers.to_vec(),
        }
    }

    #[test]
    fn role_assignment() {
        let r = assign_roles(&[p(0.1, 0.1)]).unwrap();
        assert_eq!(r.designated_tx, p(0.1, 0.1));
        assert!(r.helpers.is_empty());
        let (a, b, c) = (p(0.1, 0.2), p(0.3, 0.4), p(0.5, 0.6));
        let r = assign_roles(&[a, b, c]).unwrap();
        assert_eq!(r, roles(a, &[b, c]));
        assert_eq!(assign_roles(&[a, c, b]).unwrap().designated_tx, a);
        assert!(matches!(assign_roles(&[]), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn direct_examples() {
        let c = cfg(StrategyKind::Direct, 4.0);
        let r = roles(p(0.0, 0.0), &[]);
        assert!(!eval_direct(&r, &[p(0.5, 0.0)], p(1.0, 0.0), &c));
        assert!(eval_direct(&r, &[], p(1.0, 0.0), &c));
        assert!(eval_direct(&r, &[p(2.0, 0.0)], p(1.0, 0.0), &c));
    }

    #[test]
    fn coop_transmit_matches_covered_examples() {
        let cases = [
            (vec![p(0.0, 0.0)], vec![p(1.0, 0.0)], p(0.4, 0.0), true),
            (vec![p(0.0, 0.0)], vec![p(1.0, 0.0)], p(0.6, 0.8), false),
            (
                vec![p(0.0, 0.0), p(1.0, 1.0)],
                vec![p(0.5, 0.0)],
                p(0.9, 0.9),
                true,
            ),
        ];
        for (t, e, r, want) in cases {
            assert_eq!(eval_coop_transmit(&t, &e, r), want);
        }
    }

    #[test]
    fn jammer_example() {
        let c = cfg(StrategyKind::BestJammer, 2.0);
        let (tx, rx, eve, jam) = (p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.0), p(0.5, 0.1));
        // hand-computed: 1 / (1 + 1/0.26) and 4 / (1 + 1/0.01)
        let s_r = sinr(&c.channel, tx, jam, rx);
        let s_e = sinr(&c.channel, tx, jam, eve);
        assert!((s_r - 1.0 / (1.0 + 1.0 / 0.26)).abs() < 1e-12);
        assert!((s_r - 0.2064).abs() < 1e-4);
        assert!((s_e - 4.0 / 101.0).abs() < 1e-12);
        assert!((s_e - 0.0396).abs() < 1e-4);
        assert!(eval_best_jammer(&roles(tx, &[jam]), &[eve], rx, &c));
        assert!(!eval_best_jammer(&roles(tx, &[]), &[eve], rx, &c));
        assert!(eval_best_jammer(&roles(tx, &[jam]), &[], rx, &c));
    }

    #[test]
    fn jammer_on_eavesdropper_saturates_it() {
        let c = cfg(StrategyKind::BestJammer, 2.0);
        let (tx, rx, eve) = (p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.0));
        assert!(eval_best_jammer(&roles(tx, &[eve]), &[eve], rx, &c));
        // jammer on the receiver only hurts
        assert!(!eval_best_jammer(&roles(tx, &[rx]), &[eve], rx, &c));
    }

    #[test]
    fn relay_example() {
        let c = cfg(StrategyKind::BestRelay, 2.0);
        let (tx, rx, eve, relay) = (p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.0), p(0.9, 0.0));
        let cap = |a: Point, b: Point| capacity_unchecked(&c.channel, distance(a, b));
        assert!((cap(tx, relay) - 0.580).abs() < 1e-3);
        assert!((cap(relay, rx) - 3.329).abs() < 1e-3);
        assert!((cap(tx, eve) - 1.161).abs() < 1e-3);
        assert!((cap(relay, eve) - 1.429).abs() < 1e-3);
        assert!(!eval_best_relay(&roles(tx, &[relay]), &[eve], rx, &c));
        assert!(eval_best_relay(&roles(tx, &[relay]), &[], rx, &c));
        assert!(!eval_best_relay(&roles(tx, &[]), &[eve], rx, &c));
    }

    #[test]
    fn relay_at_receiver_position() {
        let c = cfg(StrategyKind::BestRelay, 4.0);
        let (tx, rx) = (p(0.0, 0.0), p(0.5, 0.0));
        // relay on the receiver: C(j,r) is infinite, so only t -> j matters
        assert!(eval_best_relay(&roles(tx, &[rx]), &[p(0.0, 0.6)], rx, &c));
        assert!(!eval_best_relay(&roles(tx, &[rx]), &[p(0.0, 0.3)], rx, &c));
    }

    #[test]
    fn strategy_names_round_trip() {
        for k in StrategyKind::ALL {
            assert_eq!(k.name().parse::<StrategyKind>().unwrap(), k);
        }
        assert!("relay".parse::<StrategyKind>().is_err());
    }

    #[test]
    fn dispatch_without_friendly_nodes() {
        for k in StrategyKind::ALL {
            assert!(!cfg(k, 4.0).positive_secrecy(&[], &[], p(0.5, 0.5)));
        }
    }

    fn unit_point() -> impl Strategy<Value = Point> {
        (0.0..1.0f64, 0.0..1.0f64).prop_map(Point::from)
    }

    fn points(max: usize) -> impl Strategy<Value = Vec<Point>> {
        prop::collection::vec(unit_point(), 0..max)
    }

    proptest! {
        #[test]
        fn coop_dominates_direct(f in points(10), e in points(10), r in unit_point()) {
            prop_assume!(!f.is_empty());
            let c = cfg(StrategyKind::Direct, 4.0);
            let direct = eval_direct(&assign_roles(&f).unwrap(), &e, r, &c);
            prop_assert!(eval_coop_transmit(&f, &e, r) >= direct);
            let d = Deployment::new(f.clone(), e.clone(), r);
            prop_assert_eq!(eval_coop_transmit(&f, &e, r), covered(&d));
        }

        #[test]
        fn extra_helper_never_hurts(
            f in points(8), e in points(8), r in unit_point(), h in unit_point(),
            beta in 2.0..=6.0f64,
        ) {
            prop_assume!(!f.is_empty());
            let base = assign_roles(&f).unwrap();
            let mut more = base.clone();
            more.helpers.push(h);
            let relay = cfg(StrategyKind::BestRelay, beta);
            let jam = cfg(StrategyKind::BestJammer, beta);
            prop_assert!(!eval_best_relay(&base, &e, r, &relay) || eval_best_relay(&more, &e, r, &relay));
            prop_assert!(!eval_best_jammer(&base, &e, r, &jam) || eval_best_jammer(&more, &e, r, &jam));
        }

        #[test]
        fn no_eavesdroppers_all_succeed(f in points(8), r in unit_point()) {
            prop_assume!(!f.is_empty());
            for k in StrategyKind::ALL {
                prop_assert!(cfg(k, 4.0).positive_secrecy(&f, &[], r));
            }
        }

        #[test]
        fn silent_jammer_is_direct(f in points(8), e in points(8), r in unit_point(), beta in 2.0..=6.0f64) {
            prop_assume!(!f.is_empty());
            let c = StrategyConfig::new(
                StrategyKind::BestJammer,
                ChannelParams::new(1.0, 1.0, beta, 0.0).unwrap(),
            );
            let roles = assign_roles(&f).unwrap();
            prop_assert_eq!(eval_best_jammer(&roles, &e, r, &c), eval_direct(&roles, &e, r, &c));
        }
    }
}
