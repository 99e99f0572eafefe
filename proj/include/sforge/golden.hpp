#ifndef SFORGE_GOLDEN_HPP
#define SFORGE_GOLDEN_HPP

#include <string_view>

namespace sforge {

/// Hand transcription of the printed example tables. Map rows are renamed
/// a, b, c, ... in carrier order.
inline constexpr std::string_view kExamplesGolden = R"golden(== right-not-left chain3 ==
x | 0 1 2
--+------
a | 0 0 2
b | 0 1 2
c | 0 2 2

v | a b c
--+------
a | a b c
b | b b c
c | c c c

o | a b c
--+------
a | a a c
b | a b c
c | a c c

== right-not-left chain4 R7,1 ==
x | 0 1 2 3
--+--------
a | 0 0 0 3
b | 0 0 1 3
c | 0 0 2 3
d | 0 0 3 3
e | 0 1 3 3
f | 0 2 3 3
g | 0 3 3 3

v | a b c d e f g
--+--------------
a | a b c d e f g
b | b b c d e f g
c | c c c d e f g
d | d d d d e f g
e | e e e e e f g
f | f f f f f f g
g | g g g g g g g

o | a b c d e f g
--+--------------
a | a a a d d d g
b | a a b d d e g
c | a a c d d f g
d | a a d d d g g
e | a b d d e g g
f | a c d d f g g
g | a d d d g g g

== right-not-left chain4 R7,2 ==
x | 0 1 2 3
--+--------
a | 0 0 0 3
b | 0 0 3 3
c | 0 1 1 3
d | 0 1 3 3
e | 0 2 2 3
f | 0 2 3 3
g | 0 3 3 3

== right-not-left chain4 R8,1 ==
x | 0 1 2 3
--+--------
a | 0 0 0 3
b | 0 0 1 3
c | 0 0 2 3
d | 0 0 3 3
e | 0 1 2 3
f | 0 1 3 3
g | 0 2 3 3
h | 0 3 3 3

== right-not-left chain4 R8,2 ==
x | 0 1 2 3
--+--------
a | 0 0 0 3
b | 0 0 3 3
c | 0 1 1 3
d | 0 1 2 3
e | 0 1 3 3
f | 0 2 2 3
g | 0 2 3 3
h | 0 3 3 3

== right-not-left chain4 R10 ==
x | 0 1 2 3
--+--------
a | 0 0 0 3
b | 0 0 1 3
c | 0 0 2 3
d | 0 0 3 3
e | 0 1 1 3
f | 0 1 2 3
g | 0 1 3 3
h | 0 2 2 3
i | 0 2 3 3
j | 0 3 3 3

== left-not-right chain2 ==
x | 0 1
--+----
a | 0 0
b | 0 1
c | 1 1

v | a b c
--+------
a | a b c
b | b b c
c | c c c

o | a b c
--+------
a | a a a
b | a b c
c | c c c

== absorbing chain3 size5 ==
x | 0 1 2
--+------
a | 0 0 2
b | 0 2 2
c | 1 1 2
d | 1 2 2
e | 2 2 2

v | a b c d e
--+----------
a | a b c d e
b | b b d d e
c | c d c d e
d | d d d d e
e | e e e e e

o | a b c d e
--+----------
a | a b a b e
b | a b e e e
c | c d c d e
d | c d e e e
e | e e e e e

== absorbing chain3 size6 ==
x | 0 1 2
--+------
a | 0 0 2
b | 0 1 2
c | 0 2 2
d | 1 1 2
e | 1 2 2
f | 2 2 2

v | a b c d e f
--+------------
a | a b c d e f
b | b b c d e f
c | c c c e e f
d | d d e d e f
e | e e e e e f
f | f f f f f f

o | a b c d e f
--+------------
a | a a c a c f
b | a b c d e f
c | a c c f f f
d | d d e d e f
e | d e e f f f
f | f f f f f f

)golden";

} // namespace sforge

#endif // SFORGE_GOLDEN_HPP
