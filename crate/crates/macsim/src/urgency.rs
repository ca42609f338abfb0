//! Per-packet dynamic urgency accounting.
//!
//! Every routed packet carries a lifetime budget and a hop count. At each
//! hop the packet records the local delay it just experienced, folds it
//! into its cumulative delay, and recomputes an urgency index from the
//! per-hop delay budget that remains and the fraction of hops completed
//! on time. A lower index means a more urgent packet; class queues order
//! on it and the scheduler serves the minimum.

use crate::error::SimError;
use crate::Tick;

/// Static service class of a packet's originating user.
///
/// `Urgent` is reserved for the urgent queue itself; generated traffic
/// carries one of the three profile classes and is promoted to the urgent
/// queue by its QoS flag instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ServiceClass {
    Urgent = 0,
    High = 1,
    Medium = 2,
    Low = 3,
}

impl ServiceClass {
    pub const ALL: [ServiceClass; 4] = [
        ServiceClass::Urgent,
        ServiceClass::High,
        ServiceClass::Medium,
        ServiceClass::Low,
    ];

    /// Stable queue/array index (UP=0, HP=1, MP=2, LP=3).
    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> ServiceClass {
        Self::ALL[index]
    }

    /// Short label used in reports and trace files.
    pub const fn label(self) -> &'static str {
        match self {
            ServiceClass::Urgent => "UP",
            ServiceClass::High => "HP",
            ServiceClass::Medium => "MP",
            ServiceClass::Low => "LP",
        }
    }
}

impl std::fmt::Display for ServiceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A routed data unit with lifetime, hop, and urgency accounting.
///
/// Times are integer simulation ticks (1 tick = 1 µs by default). The
/// urgency index and the per-hop delay threshold are the only real-valued
/// fields; everything else stays in exact integer arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct Packet {
    pub id: u64,
    /// Profile class of the originating user (the SPI).
    pub profile: ServiceClass,
    /// QoS flag; set packets are routed to the urgent queue regardless of
    /// their profile class.
    pub qos_flag: bool,
    /// Total lifetime budget in ticks.
    pub lifetime: Tick,
    /// Hops the packet must traverse end to end.
    pub total_hops: u32,
    pub hops_traversed: u32,
    /// Sum of recorded local delays so far, in ticks.
    pub cumulative_delay: Tick,
    /// Arrival time at the current node (generation time at the source).
    pub last_arrival_time: Tick,
    /// Hops whose local delay stayed within the threshold in force.
    pub hop_success_count: u32,
    /// Per-hop delay budget computed when the current hop began.
    pub hop_threshold: f64,
    /// Dynamic urgency index; lower means more urgent.
    pub urgency: f64,
    pub payload_bits: u64,
    pub source: u32,
    pub dest: u32,
    pub generation_time: Tick,
    /// Transmission attempts consumed by the current hop.
    pub retries: u32,
}

impl Packet {
    /// Build a freshly generated packet at its source node.
    ///
    /// The initial threshold is the whole lifetime split evenly over all
    /// hops, and with no hops traversed yet the on-time probability is 1,
    /// so the initial urgency index equals that threshold.
    #[allow(clippy::too_many_arguments)]
    pub fn generate(
        id: u64,
        profile: ServiceClass,
        qos_flag: bool,
        lifetime: Tick,
        total_hops: u32,
        payload_bits: u64,
        source: u32,
        dest: u32,
        generation_time: Tick,
    ) -> Packet {
        debug_assert!(total_hops >= 1);
        let mut packet = Packet {
            id,
            profile,
            qos_flag,
            lifetime,
            total_hops,
            hops_traversed: 0,
            cumulative_delay: 0,
            last_arrival_time: generation_time,
            hop_success_count: 0,
            hop_threshold: 0.0,
            urgency: 0.0,
            payload_bits,
            source,
            dest,
            generation_time,
            retries: 0,
        };
        packet.hop_threshold = delay_threshold(&packet).expect("fresh packet has remaining hops");
        packet.urgency = compute_dui(&packet).expect("fresh packet has remaining hops");
        packet
    }

    /// Hops still ahead of the packet.
    pub fn remaining_hops(&self) -> u32 {
        self.total_hops - self.hops_traversed
    }

    /// Queue index the packet routes to: the urgent queue when flagged,
    /// its profile queue otherwise.
    pub fn queue_index(&self) -> usize {
        if self.qos_flag {
            0
        } else {
            self.profile.index()
        }
    }

    /// Class the packet is accounted under in metrics (urgent when
    /// flagged, profile class otherwise).
    pub fn effective_class(&self) -> ServiceClass {
        ServiceClass::from_index(self.queue_index())
    }
}

/// Record the packet's arrival at the next hop.
///
/// Adds the local delay to the cumulative delay, advances the hop counts,
/// credits a hop success when the local delay stayed within the threshold
/// that was in force when the hop began, and recomputes the urgency index
/// for the next hop (skipped at the destination, where no threshold
/// exists).
pub fn record_hop_arrival(packet: &mut Packet, arrival_time: Tick) -> Result<(), SimError> {
    if arrival_time < packet.last_arrival_time {
        return Err(SimError::MonotonicClockViolation {
            packet: packet.id,
            arrival: arrival_time,
            last: packet.last_arrival_time,
        });
    }
    if packet.hops_traversed >= packet.total_hops {
        return Err(SimError::Overtraversal {
            packet: packet.id,
            total_hops: packet.total_hops,
        });
    }
    let local_delay = arrival_time - packet.last_arrival_time;
    packet.cumulative_delay += local_delay;
    packet.hops_traversed += 1;
    if (local_delay as f64) <= packet.hop_threshold {
        packet.hop_success_count += 1;
    }
    packet.last_arrival_time = arrival_time;
    if packet.remaining_hops() >= 1 {
        packet.hop_threshold = delay_threshold(packet)?;
        packet.urgency = compute_dui(packet)?;
    }
    Ok(())
}

/// Per-hop delay budget: the remaining lifetime split evenly over the
/// remaining hops. Negative when the lifetime is already overspent; the
/// expiry rule drops such packets before the value is used for ordering.
pub fn delay_threshold(packet: &Packet) -> Result<f64, SimError> {
    let remaining = packet.remaining_hops();
    if remaining == 0 {
        return Err(SimError::NoThreshold { packet: packet.id });
    }
    let remaining_lifetime = packet.lifetime as f64 - packet.cumulative_delay as f64;
    Ok(remaining_lifetime / remaining as f64)
}

/// Fraction of traversed hops that met their delay threshold.
///
/// A packet that has not traversed any hop yet has no lateness evidence
/// and reports 1.0.
pub fn success_probability(packet: &Packet) -> f64 {
    if packet.hops_traversed == 0 {
        1.0
    } else {
        packet.hop_success_count as f64 / packet.hops_traversed as f64
    }
}

/// Dynamic urgency index: threshold times on-time probability.
///
/// Lower is more urgent — a packet with little per-hop budget left, or a
/// history of late hops, sorts ahead of comfortable ones.
pub fn compute_dui(packet: &Packet) -> Result<f64, SimError> {
    Ok(delay_threshold(packet)? * success_probability(packet))
}

/// A packet whose cumulative delay has consumed its lifetime is expired.
pub fn is_expired(packet: &Packet) -> bool {
    packet.cumulative_delay >= packet.lifetime
}
