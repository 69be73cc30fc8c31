//! The registered identities. Each body returns `Ok(None)` on success, or
//! the first place the two sides differ.

mod misc;
mod remarks;
mod s1;
mod s2;
mod s3;
mod s4;
mod s5;

use super::{CheckKind, IdentityCheck, Section};

fn order(o: usize) -> usize {
    o
}

fn twice(o: usize) -> usize {
    2 * o
}

/// Bilinear tables and sampled grids grow fast; keep them small.
fn small(o: usize) -> usize {
    o.min(6)
}

fn mid(o: usize) -> usize {
    o.min(8)
}

fn wide(_: usize) -> usize {
    16
}

macro_rules! checks {
    ($( $id:literal, $sec:ident, $kind:ident, $bound:ident, $z:literal, $run:path, $about:literal; )*) => {
        &[$(
            IdentityCheck {
                id: $id,
                section: Section::$sec,
                kind: CheckKind::$kind,
                about: $about,
                bound: $bound,
                uses_z: $z,
                run: $run,
            },
        )*]
    };
}

pub(crate) static REGISTRY: &[IdentityCheck] = checks! {
    "eq-1.3", S1, MomentEquality, small, false, s1::eq_1_3, "Λ_f(f_i f_j) = [i=j]";
    "eq-1.4", S1, PolyIdentity, order, false, s1::eq_1_4, "x^n in the f basis";
    "eq-1.5", S1, MomentEquality, order, false, s1::eq_1_5, "Λ_f(x^(2n)) = C_n";
    "eq-1.13", S1, MomentEquality, small, false, s1::eq_1_13, "Λ_l(l_i l_j) = [i=j](1+[i>0])";
    "eq-1.14", S1, PolyIdentity, order, false, s1::eq_1_14, "x^n = Σ binom(n,k) l_(n-2k)";
    "eq-1.15", S1, MomentEquality, order, false, s1::eq_1_15, "Λ_l(x^(2n)) = binom(2n,n)";
    "eq-1.17", S1, SeriesIdentity, order, false, s1::eq_1_17, "Σ binom(2n,n) u^n/(1+u)^(2n+1) = 1/(1-u)";
    "eq-1.20", S1, PolyIdentity, order, false, s1::eq_1_20, "x^n in the f^(m) basis";
    "eq-1.21", S1, MomentEquality, order, false, s1::eq_1_21, "Fuss-Catalan moments";
    "eq-1.23", S1, PolyIdentity, order, false, s1::eq_1_23, "l^(m)_n = f^(m)_n - (m-1) f^(m)_(n-m)";
    "eq-1.24", S1, PolyIdentity, order, false, s1::eq_1_24, "x^n = Σ binom(n,k) l^(m)_(n-mk)";
    "eq-1.25", S1, MomentEquality, order, false, s1::eq_1_25, "Λ(x^(mn)) = binom(mn,n)";
    "eq-1.27", S1, PolyIdentity, order, false, s1::eq_1_27, "L^(m)_n = f^(m)_n - f^(m)_(n-m)";
    "eq-1.28", S1, PolyIdentity, order, false, s1::eq_1_28, "x^n in the L^(m) basis";
    "eq-1.29", S1, MomentEquality, order, false, s1::eq_1_29, "moments of L^(m)";
    "eq-1.30", S1, PolyIdentity, order, false, s1::eq_1_30, "Rogers-Szego recursion";
    "eq-1.31", S1, SeriesIdentity, order, false, s1::eq_1_31, "q-binomial theorem";
    "eq-1.32", S1, SeriesIdentity, order, false, s1::eq_1_32, "e(u) = 1/(u;q)_inf";
    "eq-1.33", S1, SeriesIdentity, order, false, s1::eq_1_33, "E(u) = (u;q)_inf and e E = 1";
    "eq-1.34", S1, PolyIdentity, order, false, s1::eq_1_34, "Σ (-1)^k q^binom(k,2) [n,k] x^k = (x;q)_n";
    "eq-1.35", S1, SeriesIdentity, order, false, s1::eq_1_35, "1/(x;q)_n = Σ [n+k-1,k] x^k";
    "eq-1.36", S1, Limit, order, false, s1::eq_1_36, "t_n(x,1) = monic Chebyshev T";
    "eq-1.37", S1, Limit, order, false, s1::eq_1_37, "u_n(x,1) = monic Chebyshev U";
    "eq-1.40", S1, PolyIdentity, order, false, s1::eq_1_40, "triangle entries are expansion coefficients";
    "eq-1.42", S1, PolyIdentity, order, false, s1::eq_1_42, "c(n,k) = 0 unless m | n-k";
    "eq-1.43", S1, SeriesIdentity, order, false, s1::eq_1_43, "Φ = 1 + λ_0 u Φ Φ_1 ... Φ_(m-1)";
    "eq-1.44", S1, MomentEquality, order, false, s1::eq_1_44, "first-return convolution";
    "eq-1.45", S1, SeriesIdentity, order, false, s1::eq_1_45, "Φ = 1 + λ_0 u Φ Ψ";
    "psi-m", S1, SeriesIdentity, order, false, s1::psi_m, "Ψ_m = 1/(1 - m u Φ_m^(m-1))";

    "eq-2.1", S2, PolyIdentity, order, false, s2::eq_2_1, "f^(m)(x,q) closed form = recurrence";
    "eq-2.2", S2, PolyIdentity, order, false, s2::eq_2_2, "f^(m)_n = x f^(m)_(n-1) - q^(n-m) f^(m)_(n-m)";
    "eq-2.3", S2, SeriesIdentity, order, false, s2::eq_2_3, "C(u) = 1 + u C(u) C(qu) ... C(q^(m-1)u)";
    "eq-2.4", S2, SeriesIdentity, order, false, s2::eq_2_4, "C(u) = E(-qu)/E(-u)";
    "eq-2.5", S2, SeriesIdentity, order, false, s2::eq_2_5, "E(u) - E(qu) = u E(q^m u)";
    "eq-2.6", S2, MomentEquality, order, false, s2::eq_2_6, "Carlitz convolution";
    "eq-2.7", S2, Annihilation, order, false, s2::eq_2_7, "Σ (-1)^k q^(2 binom(k,2)) [n+1-k,k] C_(n-k) = 0";
    "eq-2.8", S2, Annihilation, order, false, s2::eq_2_8, "general m annihilation";
    "eq-2.9", S2, SeriesIdentity, order, false, s2::eq_2_9, "inverse series, m = 2";
    "eq-2.10", S2, SeriesIdentity, order, false, s2::eq_2_10, "inverse series, general m";

    "eq-3.1", S3, PolyIdentity, order, false, s3::eq_3_1, "F(x,q) closed form = recurrence";
    "eq-3.1-witness", S3, MomentEquality, order, false, s3::witness, "Λ_F(x F_3) = (q-1)q^3";
    "eq-3.2", S3, PolyIdentity, order, false, s3::eq_3_2, "F_n = f_n(A) 1";
    "eq-3.3", S3, PolyIdentity, order, false, s3::eq_3_3, "F_n = A F_(n-1) - F_(n-2)";
    "eq-3.4", S3, PolyIdentity, order, false, s3::eq_3_4, "four-term recurrence for F";
    "eq-3.5", S3, PolyIdentity, order, false, s3::eq_3_5, "x^n in the F basis";
    "eq-3.6", S3, MomentEquality, order, false, s3::eq_3_6, "Λ_F(x^(2n)) = q^n c_q(n)";
    "eq-3.7", S3, SeriesIdentity, order, false, s3::eq_3_7, "inverse series for c_n(q)";
    "eq-3.8", S3, PolyIdentity, order, false, s3::eq_3_8, "l_n(x,q) = F_n - F_(n-2)";
    "eq-3.10", S3, PolyIdentity, order, false, s3::eq_3_10, "l(x,q) closed form = operator recurrence";
    "eq-3.11", S3, PolyIdentity, order, false, s3::eq_3_11, "l_n(x,q) = l_n(A) 1";
    "eq-3.12", S3, PolyIdentity, order, false, s3::eq_3_12, "x^n = Σ [n,k] l_(n-2k)(x,q)";
    "eq-3.13", S3, MomentEquality, order, false, s3::eq_3_13, "Λ_l(x^(2n)) = [2n,n]";
    "eq-3.14", S3, SeriesIdentity, order, false, s3::eq_3_14, "inverse series for [2n,n]";
    "eq-3.16", S3, PolyIdentity, order, false, s3::eq_3_16, "F^(m) closed form = recurrence";
    "eq-3.17", S3, MomentEquality, order, false, s3::eq_3_17, "c^(m)_n = Λ_F(x^(mn)) defines Λ_F";
    "eq-3.18", S3, Annihilation, order, false, s3::eq_3_18, "Λ_F(F^(m)_(mn)) = 0";
    "eq-3.19", S3, SeriesIdentity, order, false, s3::eq_3_19, "inverse series for c^(m)_n";
    "eq-3.20", S3, PolyIdentity, order, false, s3::eq_3_20, "L^(m)(x,q) closed form = recurrence";
    "eq-3.21", S3, PolyIdentity, order, false, s3::eq_3_21, "L^(m)_n = F^(m)_n - F^(m)_(n-m)";
    "eq-3.22", S3, MomentEquality, order, false, s3::eq_3_22, "b^(m)_n = Λ_L(x^(mn)) defines Λ_L";
    "eq-3.23", S3, Annihilation, order, false, s3::eq_3_23, "Λ_L(L^(m)_(mn)) = 0";
    "eq-3.24", S3, SeriesIdentity, order, false, s3::eq_3_24, "inverse series for b^(m)_n";

    "eq-4.2", S4, PolyIdentity, order, false, s4::eq_4_2, "u_n recurrence";
    "eq-4.4", S4, MomentEquality, small, false, s4::eq_4_4, "Λ_u(u_i u_j)";
    "eq-4.5", S4, PolyIdentity, order, false, s4::eq_4_5, "x^n in the u basis";
    "eq-4.6", S4, MomentEquality, order, false, s4::eq_4_6, "Λ_u(x^(2n)) = Andrews q-Catalan";
    "eq-4.7", S4, SeriesIdentity, order, false, s4::eq_4_7, "functional equation of C(u,q)";
    "eq-4.8", S4, SeriesIdentity, order, false, s4::eq_4_8, "C(u,q) = (1+q)(1-h(u))/u";
    "eq-4.10", S4, PolyIdentity, order, false, s4::eq_4_10, "t_n recurrence";
    "eq-4.11", S4, PolyIdentity, order, false, s4::eq_4_11, "t_n from u_n and u_(n-2)";
    "eq-4.13", S4, MomentEquality, small, false, s4::eq_4_13, "Λ_t(t_i t_j)";
    "eq-4.14", S4, PolyIdentity, order, false, s4::eq_4_14, "x^n in the t basis";
    "eq-4.15", S4, MomentEquality, order, false, s4::eq_4_15, "Λ_t(x^(2n)) = [2n,n] q^n/(-q;q)_n^2";
    "eq-4.16", S4, SeriesIdentity, order, false, s4::eq_4_16, "G(u,q) = (u;q^2)_inf";
    "eq-4.17", S4, SeriesIdentity, order, false, s4::eq_4_17, "g(u) = G(qu,q)/G(u,q)";
    "eq-4.18", S4, SeriesIdentity, order, false, s4::eq_4_18, "moment series of t is g(qu)";
    "eq-4.19", S4, PolyIdentity, order, false, s4::eq_4_19, "t_n = T_n(x,-1,q)/(-q;q)_(n-1)";
    "eq-4.20", S4, PolyIdentity, order, false, s4::eq_4_20, "u_n = U_n(x,-1,q)/(-q;q)_n";
    "eq-4.21", S4, PolyIdentity, twice, false, s4::eq_4_21, "Σ q^(j^2) [n,j]^2 = [2n,n]";

    "eq-5.1", S5, PolyIdentity, order, true, s5::eq_5_1, "f(x,z,q) closed form = recurrence";
    "eq-5.2", S5, SeriesIdentity, order, true, s5::eq_5_2, "Φ_f(u,z) = 1 + qu/((1-z)(1-qz)) Φ_f(u,z) Φ_f(qu,qz)";
    "eq-5.3", S5, Limit, order, true, s5::eq_5_3, "Φ_f(u,z,1) = C(u/(1-z)^2)";
    "eq-5.6", S5, SeriesIdentity, order, true, s5::eq_5_6, "functional equation of ψ";
    "eq-5.7", S5, SeriesIdentity, order, true, s5::eq_5_7, "Φ_f(u,z) = ψ(-qu,z)";
    "eq-5.8", S5, SeriesIdentity, order, true, s5::eq_5_8, "functional equation of ψ(uz,z)";
    "eq-5.9", S5, SeriesIdentity, mid, true, s5::eq_5_9, "the solution of (5.8) is G(quz,qz)/G(uz,z)";
    "eq-5.11", S5, PolyIdentity, order, true, s5::eq_5_11, "l(x,z,q) closed form = recurrence";
    "eq-5.12", S5, SeriesIdentity, order, true, s5::eq_5_12, "Φ_l = 1 + qu/(1-z) Φ_l Ψ_l";
    "eq-5.13", S5, SeriesIdentity, order, true, s5::eq_5_13, "functional equation of Ψ_l";
    "eq-5.14", S5, SeriesIdentity, order, true, s5::eq_5_14, "Ψ_l = G(-q^3u,qz)/G(-q^2u,z)";
    "eq-5.15", S5, SeriesIdentity, order, true, s5::eq_5_15, "Φ_l = G(-q^2u,z)/G(-qu,z)";
    "eq-5.18", S5, SeriesIdentity, order, true, s5::eq_5_18, "functional equation of φ";
    "eq-5.19", S5, SeriesIdentity, order, true, s5::eq_5_19, "F(u,qz)/F(u,z) = G(quz,qz)/G(uz,z)";
    "eq-5.20", S5, SeriesIdentity, order, true, s5::eq_5_20, "product series with (q^n z^2;q)_n";
    "eq-5.21", S5, SeriesIdentity, order, true, s5::eq_5_21, "Φ_f through F";
    "eq-5.22", S5, SeriesIdentity, order, false, s5::eq_5_22, "C(u,q) = Φ_f(u,-q,q)";
    "eq-5.23", S5, MomentEquality, order, false, s5::eq_5_23, "two sums for the Andrews q-Catalan numbers";
    "eq-5.24", S5, SeriesIdentity, order, true, s5::eq_5_24, "Cantero-Iserles a_n by two routes";
    "eq-5.25", S5, Limit, small, false, s5::eq_5_25, "limit of a_n(z,q) at q = 1";
    "eq-5.27", S5, SeriesIdentity, order, true, s5::eq_5_27, "F(qu,z)/F(u,z) = 1 - u/(1-z) φ";
    "note-5.1", S5, PolyIdentity, order, false, s5::note_5_1, "f_n(x,-q,q) = u_n(x,q)";
    "note-5.2", S5, PolyIdentity, order, false, s5::note_5_2, "l_n(x,-q,q) = t_n(x,q)";

    "fs-routes", Final, PolyIdentity, order, false, remarks::fs_routes, "f^(m)(x,q,s) closed form = recurrence";
    "fs-product", Final, PolyIdentity, order, false, remarks::fs_product, "f^(1)_n(x,q,s) = (x-s)(x-qs)...";
    "ls-routes", Final, PolyIdentity, order, false, remarks::ls_routes, "l^(m)(x,q,s) closed form = difference";
    "ls-carlitz", Final, PolyIdentity, order, false, remarks::ls_carlitz, "l^(2)(x,q,s) is Carlitz q-Lucas";
    "fz-at-zero", Final, PolyIdentity, mid, false, remarks::fz_at_zero, "f_n(x,0,q) = f^(2)_n(x,q,q)";

    "route-equality", Misc, PolyIdentity, order, false, misc::route_equality, "closed form = recurrence, every family";
    "triple-route", Misc, MomentEquality, mid, false, misc::triple_route, "triangle = expansion = series";
    "qbinomial-symmetry", Misc, PolyIdentity, wide, false, misc::qbinomial_symmetry, "[n,k] = [n,n-k]";
    "qbinomial-pascal", Misc, PolyIdentity, wide, false, misc::qbinomial_pascal, "both q-Pascal rules";
    "rogers-szego-dq", Misc, PolyIdentity, order, false, misc::rogers_szego_dq, "D_q r_n = [n] r_(n-1)";
    "classical-limit", Misc, Limit, order, false, misc::classical_limit, "q-families at q = 1";
};
