#include "spincrystal/appendix.hpp"

namespace spincrystal {

// Character tables of the irreducibles in degrees 2-4 (generic rank) and
// 5-6 (rank 1). Row syntax:
//   <label> | <term> + <term> + ... | <condition> <condition> ...
// A term is COEFF.WORD, or COEFF.perm(WORD) for a uniform-coefficient sum
// over the distinct rearrangements of WORD. Words use letters i, j, k, l
// with up to three primes; a prime bumps the residue by one. Distinct
// letter families implicitly take non-neighbouring values (|x - y| > 1
// for every pair of concrete residues from different families).
// Conditions: ell=1 / ell>1 gate on the rank; VAR:I ranges over the index
// set; VAR:lo..hi over a bounded range; VAR:a|b over two values. Range
// endpoints are integers or ell-K. Rank-1 rows in degrees 5-6 are written
// with literal residues and carry no variables.
const char* const kAppendixFixture = R"FIX(
# degree 2
table 2
ii | 2.ii | i:I
ii' | 1.ii' | i:0..ell-1
i'i | 1.i'i | i:0..ell-1
ij | 1.ij + 1.ji | i:I j:I

# degree 3
table 3
iii | 6.iii | i:I
iii' | 2.iii' | i:0|ell-1
ii'i | 1.ii'i | i:0|ell-1
i'ii | 2.i'ii | i:0|ell-1
iii' | 2.iii' + 1.ii'i | i:1..ell-2
i'ii | 2.i'ii + 1.ii'i | i:1..ell-2
ii'i' | 2.ii'i' + 1.i'ii' | i:0..ell-1
i'ii' | 2.i'i'i + 1.i'ii' | i:0..ell-1
ii'i'' | 1.ii'i'' | i:0..ell-2
ii''i' | 1.ii''i' + 1.i''ii' | i:0..ell-2
i'ii'' | 1.i'ii'' + 1.i'i''i | i:0..ell-2
i''i'i | 1.i''i'i | i:0..ell-2
iij | 2.iij + 2.iji + 2.jii | i:I j:I
iji' | 1.iji' + 1.jii' + 1.ii'j | i:0..ell-1 j:I
i'ji | 1.i'ji + 1.ji'i + 1.i'ij | i:0..ell-1 j:I
ijk | 1.perm(ijk) | i:I j:I k:I

# degree 4, one or two distinct residues
table 4
iiii | 24.iiii | i:I
iiii' | 6.iiii' | ell=1 i:0
iii'i | 2.iii'i | ell=1 i:0
ii'ii | 2.ii'ii | ell=1 i:0
i'iii | 6.i'iii | ell=1 i:0
iiii' | 6.iiii' + 2.iii'i | ell>1 i:0|ell-1
ii'ii | 2.iii'i + 2.ii'ii | ell>1 i:0|ell-1
i'iii | 6.i'iii + 2.ii'ii | ell>1 i:0|ell-1
iiii' | 6.iiii' + 4.iii'i + 2.ii'ii | ell>1 i:1..ell-2
i'iii | 6.i'iii + 4.ii'ii + 2.iii'i | ell>1 i:1..ell-2
iii'i' | 4.iii'i' + 2.ii'ii' | i:0|ell-1
ii'i'i | 1.ii'ii' + 2.ii'i'i + 1.i'ii'i | i:0|ell-1
i'iii' | 2.i'iii' | i:0|ell-1
i'i'ii | 4.i'i'ii + 2.i'ii'i | i:0|ell-1
iii'i' | 4.iii'i' + 2.ii'ii' | i:1..ell-2
ii'i'i | 2.i'iii' + 2.ii'i'i + 1.i'ii'i + 1.ii'ii' | i:1..ell-2
i'i'ii | 4.i'i'ii + 2.i'ii'i | i:1..ell-2
ii'i'i' | 6.ii'i'i' + 4.i'ii'i' + 2.i'i'ii' | i:0..ell-1
i'i'i'i | 6.i'i'i'i + 4.i'i'ii' + 2.i'ii'i' | i:0..ell-1
iiij | 6.perm(iiij) | i:I j:I
iijj | 4.perm(iijj) | i:I j:I

# degree 4, three distinct residues
table 4
iii'i'' | 2.iii'i'' | i:0
ii'ii'' | 1.ii'ii'' + 1.ii'i''i | i:0
i''i'ii | 2.i''i'ii | i:0
i'iii'' | 2.i'iii'' + 2.i'i''ii + 2.i'ii''i | i:0
ii''i'i | 1.ii''i'i + 1.i''ii'i | i:0
iii''i' | 2.iii''i' + 2.ii''ii' + 2.i''iii' | i:0
iii'i'' | 2.iii'i'' + 1.ii'ii'' + 1.ii'i''i | i:1..ell-2
i''i'ii | 2.i''i'ii + 1.i''ii'i + 1.ii''i'i | i:1..ell-2
i'i''ii | 2.i'i''ii + 2.i'ii''i + 2.i'iii'' + 1.ii'i''i + 1.ii'ii'' | i:1..ell-2
iii''i' | 2.iii''i' + 2.ii''ii' + 2.i''iii' + 1.ii''i'i + 1.i''ii'i | i:1..ell-2
ii'i'i'' | 1.ii'i''i' + 2.ii'i'i'' + 1.i'ii'i'' | i:0..ell-3
i''i'ii' | 1.i''i'ii' + 2.i''i'i'i + 1.i'i''i'i | i:0..ell-3
ii''i'i' | 2.ii''i'i' + 2.i''ii'i' + 1.ii'i''i' + 1.i''i'ii' | i:0..ell-3
i'ii'i'' | 2.i'i'i''i + 2.i'i'ii'' + 1.i'i''i'i + 1.i'ii'i'' | i:0..ell-3
i'ii''i' | 1.i'ii''i' + 1.i'i''ii' | i:0..ell-3
ii'i''i' | 1.ii'i''i' | i:ell-2
ii''i'i | 1.i'i''i'i | i:ell-2
ii'i'i'' | 2.ii'i'i'' + 1.i'ii'i'' | i:ell-2
i''i'ii' | 2.i''i'i'i + 1.i''i'ii' | i:ell-2
i'ii''i' | 1.i'ii''i' + 1.i'i''ii' | i:ell-2
ii''i'i' | 2.ii''i'i' + 2.i''ii'i' + 1.i''i'ii' | i:ell-2
i'i'ii'' | 2.i'i'ii'' + 2.i'i'i''i + 1.i'ii'i'' | i:ell-2
ii'i''i'' | 2.ii'i''i'' + 1.ii''i'i'' + 1.i''ii'i'' | i:0..ell-2
i''i'ii'' | 2.i''i''i'i + 1.i''i'i''i + 1.i''i'ii'' | i:0..ell-2
i'ii''i'' | 2.i'i''i''i + 2.i'i''ii'' + 2.i'ii''i'' + 1.i''i'i''i + 1.i''i'ii'' | i:0..ell-2
ii''i'i'' | 2.ii''i''i' + 2.i''ii''i' + 2.i''i''ii' + 1.ii''i'i'' + 1.i''ii'i'' | i:0..ell-2
ii'jj | 2.ii'jj + 2.iji'j + 2.jii'j + 2.ijji' + 2.jiji' + 2.jjii' | i:0..ell-1 j:I
i'ijj | 2.i'ijj + 2.i'jij + 2.ji'ij + 2.i'jji + 2.ji'ji + 2.jji'i | i:0..ell-1 j:I
iii'j | 2.iii'j + 2.iiji' + 2.ijii' + 2.jiii' | i:0|ell-1 j:I
ii'ij | 1.ii'ij + 1.ii'ji + 1.iji'i + 1.jii'i | i:0|ell-1 j:I
i'iij | 2.i'iij + 2.i'iji + 2.i'jii + 2.ji'ii | i:0|ell-1 j:I
iii'j | 2.iii'j + 2.iiji' + 2.ijii' + 2.jiii' + 1.ii'ij + 1.ii'ji + 1.iji'i + 1.jii'i | i:1..ell-2 j:I
i'iij | 2.i'iij + 2.i'iji + 2.i'jii + 2.ji'ii + 1.ii'ij + 1.ii'ji + 1.iji'i + 1.jii'i | i:1..ell-2 j:I
ii'i'j | 2.ii'i'j + 2.ii'ji' + 2.iji'i' + 2.jii'i' + 1.i'ii'j + 1.i'iji' + 1.i'jii' + 1.ji'ii' | i:0..ell-1 j:I
i'ii'j | 2.i'i'ij + 2.i'i'ji + 2.i'ji'i + 2.ji'i'i + 1.i'ii'j + 1.i'iji' + 1.i'jii' + 1.ji'ii' | i:0..ell-1 j:I
iijk | 2.perm(iijk) | i:I j:I k:I

# degree 4, four distinct residues
table 4
ii'i''i''' | 1.ii'i''i''' | i:0..ell-3
i'''i''i'i | 1.i'''i''i'i | i:0..ell-3
ii'i'''i'' | 1.ii'i'''i'' + 1.ii'''i'i'' + 1.i'''ii'i'' | i:0..ell-3
ii'''i''i' | 1.ii'''i''i' + 1.i'''ii''i' + 1.i'''i''ii' | i:0..ell-3
i'i''i'''i | 1.i'i''i'''i + 1.i'i''ii''' + 1.i'ii''i''' | i:0..ell-3
i''i'ii''' | 1.i''i'''i'i + 1.i''i'i'''i + 1.i''i'ii''' | i:0..ell-3
ii''i'i''' | 1.ii''i'i''' + 1.ii''i'''i' + 1.i''ii'i''' + 1.i''ii'''i' + 1.i''i'''ii' | i:0..ell-3
i'''i'i''i | 1.i'''i'i''i + 1.i'i'''i''i + 1.i'''i'ii'' + 1.i'i'''ii'' + 1.i'ii'''i'' | i:0..ell-3
ii'jj' | 1.ii'jj' + 1.iji'j' + 1.ijj'i' + 1.jii'j' + 1.jij'i' + 1.jj'ii' | i:0..ell-1 j:I
i'ijj' | 1.i'ijj' + 1.i'jij' + 1.i'jj'i + 1.ji'ij' + 1.ji'j'i + 1.jj'i'i | i:0..ell-1 j:I
ii'j'j | 1.ii'j'j + 1.ij'i'j + 1.ij'ji' + 1.j'ii'j + 1.j'iji' + 1.j'jii' | i:0..ell-1 j:I
i'ij'j | 1.i'ij'j + 1.i'j'ij + 1.i'j'ji + 1.j'i'ij + 1.j'i'ji + 1.j'ji'i | i:0..ell-1 j:I
ii'jk | 1.ii'jk + 1.ii'kj + 1.iji'k + 1.iki'j + 1.jii'k + 1.kii'j + 1.ijki' + 1.ikji' + 1.jiki' + 1.kiji' + 1.jkii' + 1.kjii' | i:0..ell-1 j:I k:I
i'ijk | 1.i'ijk + 1.i'ikj + 1.i'jik + 1.i'kij + 1.ji'ik + 1.ki'ij + 1.i'jki + 1.i'kji + 1.ji'ki + 1.ki'ji + 1.jki'i + 1.kji'i | i:0..ell-1 j:I k:I
ii'i''j | 1.ii'i''j + 1.ii'ji'' + 1.iji'i'' + 1.jii'i'' | i:0..ell-2 j:I
ii''i'j | 1.ii''i'j + 1.i''ii'j + 1.ii''ji' + 1.i''iji' + 1.iji''i' + 1.i''jii' + 1.jii''i' + 1.ji''ii' | i:0..ell-2 j:I
i'ii''j | 4.ji'ii'' + 4.ji'i''i | i:0..ell-2 j:I
i''i'ij | 1.i''i'ij + 1.i''i'ji + 1.i''ji'i + 1.ji''i'i | i:0..ell-2 j:I
ijkl | 1.perm(ijkl) | i:I j:I k:I l:I

# degree 5 at rank 1
table 5
00000 | 120.00000 | ell=1
00001 | 24.00001 | ell=1
00010 | 6.00010 | ell=1
00100 | 4.00100 | ell=1
01000 | 6.01000 | ell=1
10000 | 24.10000 | ell=1
10001 | 6.10001 | ell=1
01001 | 2.01001 | ell=1
00101 | 2.00101 + 4.00110 + 2.01010 | ell=1
00011 | 12.00011 + 6.00101 | ell=1
11000 | 12.11000 + 6.10100 | ell=1
01010 | 2.01010 + 4.01100 + 2.10100 | ell=1
10010 | 2.10010 | ell=1
10011 | 4.10011 + 2.10101 + 4.11001 | ell=1
00111 | 12.00111 + 8.01011 + 4.10011 + 4.01101 + 2.10101 | ell=1
01110 | 6.01110 + 4.10110 + 4.01101 + 2.01011 + 2.11010 + 2.10101 | ell=1
11100 | 12.11100 + 8.11010 + 4.11001 + 4.10110 + 2.10101 | ell=1
01111 | 24.01111 + 18.10111 + 12.11011 + 6.11101 | ell=1
11110 | 24.11110 + 18.11101 + 12.11011 + 6.10111 | ell=1
11111 | 120.11111 | ell=1

# degree 6 at rank 1
table 6
000000 | 720.000000 | ell=1
000001 | 24.000010 + 120.000001 | ell=1
000100 | 12.000100 + 24.000010 | ell=1
001000 | 12.001000 + 12.000100 | ell=1
010000 | 12.001000 + 24.010000 | ell=1
100000 | 24.010000 + 120.100000 | ell=1
000011 | 48.000011 + 24.000101 + 4.001001 | ell=1
110000 | 48.110000 + 24.101000 + 4.100100 | ell=1
000110 | 12.000110 + 6.000101 + 6.001010 | ell=1
011000 | 12.011000 + 6.101000 + 6.010100 | ell=1
001010 | 4.001010 + 8.001100 + 4.010100 | ell=1
001001 | 4.001001 | ell=1
010001 | 6.010001 | ell=1
100001 | 24.100001 | ell=1
100100 | 4.100100 | ell=1
100010 | 6.100010 | ell=1
010010 | 2.010010 | ell=1
100101 | 4.100110 + 4.110010 + 2.100101 + 2.101010 | ell=1
010011 | 4.011001 + 4.010011 + 2.101001 + 2.010101 | ell=1
100011 | 6.100101 + 12.100011 | ell=1
110001 | 6.101001 + 12.110001 | ell=1
000111 | 36.000111 + 24.001011 + 12.010011 + 12.001101 + 6.010101 | ell=1
011001 | 12.011100 + 8.101100 + 8.011010 + 2.101001 + 2.010101 + 4.010110 + 4.011001 + 4.110100 + 4.101010 | ell=1
111000 | 36.111000 + 24.110100 + 12.110010 + 12.101100 + 6.101010 | ell=1
001011 | 12.001110 + 8.001101 + 8.010110 + 2.100101 + 2.101010 + 4.011010 + 4.100110 + 4.001011 + 4.010101 | ell=1
001111 | 48.001111 + 36.010111 + 24.011011 + 12.011101 + 24.100111 + 8.101101 + 8.110011 + 16.101011 + 4.110101 | ell=1
100111 | 12.111001 + 12.100111 + 16.110011 + 8.101011 + 8.110101 + 4.101101 | ell=1
011101 | 24.011110 + 18.101110 + 12.110110 + 6.111010 + 18.011101 + 12.101101 + 12.011011 + 6.101011 + 6.110101 + 6.010111 | ell=1
111001 | 48.111100 + 36.111010 + 24.110110 + 12.101110 + 24.111001 + 16.110101 + 8.101101 + 8.110011 + 4.101011 | ell=1
011111 | 120.011111 + 96.101111 + 72.110111 + 48.111011 + 24.111101 | ell=1
111101 | 120.111110 + 96.111101 + 72.111011 + 48.110111 + 24.101111 | ell=1
111111 | 720.111111 | ell=1
)FIX";

}  // namespace spincrystal
