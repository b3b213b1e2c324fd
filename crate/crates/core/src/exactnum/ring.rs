use std::fmt::Debug;

/// Commutative ring with exact (partial) division.
///
/// Method names avoid the `std::ops` names so that concrete types can also
/// implement the operator traits without ambiguity.
pub trait Ring: Clone + PartialEq + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / o` when the quotient lies in the ring.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    /// True for elements of the ground field (no free parameters).
    fn is_constant(&self) -> bool;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.plus(o);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self = self.minus(o);
    }
}
