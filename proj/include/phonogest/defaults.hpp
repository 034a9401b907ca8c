#pragma once

// Generated by tools/embed_defaults.py from config/*.cfg. Do not edit.

#include <string_view>

namespace phonogest::defaults {

inline constexpr std::string_view kDefaultLattice = R"cfg(# Type lattice and named constraints.
#
# [atoms]       key = atom atom ...          (keys are only group labels)
# [types]       name = member | member ...   (members: atoms or earlier types)
# [constraint NAME]
#               term = <description>         (indented lines continue the term)

[atoms]
roles     = pure_onset nucleus pure_coda codaonset
classes   = vowel sonorant supralaryngeal_obstruent boundary
laryngeal = inactive voiceless nasal

[types]
in_onset      = pure_onset | codaonset
coda          = pure_coda
rhyme         = nucleus | pure_coda
margin        = in_onset | coda
syllable_role = rhyme | margin
obstruent     = supralaryngeal_obstruent
consonant     = sonorant | obstruent
segment_class = vowel | consonant | boundary
laryngeal     = inactive | voiceless
secondary_state = laryngeal | nasal

[constraint final_devoicing]
term = self:(seg: ~obstruent ; seg:obstruent & (~coda ; coda & seg:secondary:voiceless))

[constraint voiced_in_onset]
term = self:(~in_onset ; in_onset & seg:secondary:inactive)
)cfg";

inline constexpr std::string_view kDefaultInventory = R"cfg(# Segment inventory.
#
# [secondary STATE]   gesture = <gesture>     gesture emitted for that secondary state
# [segment ID]
#   aliases     = alternative ids
#   class       = segment class type
#   alternating = yes | no                    (alternating obstruents only)
#   length      = lax_short | tense_long | none
#   primary     = <gesture>
#   secondary   = state | state ...           (admissible states, preferred first)
#   constraints = named constraints attached to every occurrence
# [onsets]
#   cluster     = ID ID ...                   (legal multi-segment onsets, repeatable)
#   illegal     = ID ...                      (consonants that never begin an onset)
#
# <gesture> := tract=VAR cd=CAT cl=CAT target=NUM class=CLASS [clip=default|none]

[secondary voiceless]
gesture = tract=GA cd=open cl=glottis target=2.5 class=glottal_opening clip=none

[secondary nasal]
gesture = tract=VA cd=open cl=velum target=0.8 class=velic_opening clip=none

# --- boundary items -------------------------------------------------------

[segment glottal_stop]
aliases = ʔ ?
class = boundary
primary = tract=GA cd=closed cl=glottis target=-0.5 class=glottal_closure clip=default

[segment postphonatory_opening]
aliases = ppo
class = boundary
primary = tract=GA cd=open cl=glottis target=2.5 class=glottal_opening clip=none

# --- vowels ---------------------------------------------------------------

[segment aː]
aliases = a: aa
class = vowel
length = tense_long
primary = tract=TH cd=wide cl=pharyngeal target=16 class=vocalic clip=none

[segment a]
class = vowel
length = lax_short
primary = tract=TH cd=wide cl=pharyngeal target=15 class=vocalic clip=none

[segment ɛ]
aliases = ae E
class = vowel
length = lax_short
primary = tract=TH cd=mid cl=palatal target=12 class=vocalic clip=none

[segment eː]
aliases = e:
class = vowel
length = tense_long
primary = tract=TH cd=narrow cl=palatal target=5 class=vocalic clip=none

[segment ə]
aliases = @ schwa
class = vowel
length = none
primary = tract=TH cd=neutral cl=central target=10 class=vocalic clip=none

[segment iː]
aliases = i:
class = vowel
length = tense_long
primary = tract=TH cd=narrow cl=palatal target=3 class=vocalic clip=none

[segment ɪ]
aliases = I
class = vowel
length = lax_short
primary = tract=TH cd=narrow cl=palatal target=5 class=vocalic clip=none

[segment oː]
aliases = o:
class = vowel
length = tense_long
primary = tract=TH cd=mid cl=velar target=9 class=vocalic clip=none

[segment ɔ]
aliases = O
class = vowel
length = lax_short
primary = tract=TH cd=mid cl=velar target=11 class=vocalic clip=none

[segment uː]
aliases = u:
class = vowel
length = tense_long
primary = tract=TH cd=narrow cl=velar target=4 class=vocalic clip=none

[segment ʊ]
aliases = U
class = vowel
length = lax_short
primary = tract=TH cd=narrow cl=velar target=6 class=vocalic clip=none

# --- obstruents -----------------------------------------------------------

[segment b]
class = supralaryngeal_obstruent
alternating = yes
primary = tract=LA cd=closed cl=lips target=-2 class=stop clip=default
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment p]
class = supralaryngeal_obstruent
primary = tract=LA cd=closed cl=lips target=-2 class=stop clip=default
secondary = voiceless
constraints = final_devoicing

[segment d]
class = supralaryngeal_obstruent
alternating = yes
primary = tract=TTH cd=closed cl=alveolar target=-2 class=stop clip=default
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment t]
class = supralaryngeal_obstruent
primary = tract=TTH cd=closed cl=alveolar target=-2 class=stop clip=default
secondary = voiceless
constraints = final_devoicing

[segment g]
class = supralaryngeal_obstruent
alternating = yes
primary = tract=TH cd=closed cl=velar target=-2 class=stop clip=default
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment k]
class = supralaryngeal_obstruent
primary = tract=TH cd=closed cl=velar target=-2 class=stop clip=default
secondary = voiceless
constraints = final_devoicing

[segment v]
class = supralaryngeal_obstruent
alternating = yes
primary = tract=LA cd=critical cl=labiodental target=1.5 class=fricative clip=none
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment f]
class = supralaryngeal_obstruent
primary = tract=LA cd=critical cl=labiodental target=1.5 class=fricative clip=none
secondary = voiceless
constraints = final_devoicing

[segment z]
class = supralaryngeal_obstruent
alternating = yes
primary = tract=TTH cd=critical cl=alveolar target=1.0 class=fricative clip=none
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment s]
class = supralaryngeal_obstruent
primary = tract=TTH cd=critical cl=alveolar target=1.0 class=fricative clip=none
secondary = voiceless
constraints = final_devoicing

[segment ʒ]
aliases = Z zh
class = supralaryngeal_obstruent
alternating = yes
primary = tract=TTH cd=critical cl=postalveolar target=1.2 class=fricative clip=none
secondary = inactive | voiceless
constraints = final_devoicing voiced_in_onset

[segment ʃ]
aliases = S sh
class = supralaryngeal_obstruent
primary = tract=TTH cd=critical cl=postalveolar target=1.2 class=fricative clip=none
secondary = voiceless
constraints = final_devoicing

# --- sonorants ------------------------------------------------------------

[segment m]
class = sonorant
primary = tract=LA cd=closed cl=lips target=-2 class=sonorant clip=default
secondary = nasal
constraints = final_devoicing

[segment n]
class = sonorant
primary = tract=TTH cd=closed cl=alveolar target=-2 class=sonorant clip=default
secondary = nasal
constraints = final_devoicing

[segment ŋ]
aliases = N ng
class = sonorant
primary = tract=TH cd=closed cl=velar target=-2 class=sonorant clip=default
secondary = nasal
constraints = final_devoicing

[segment l]
class = sonorant
primary = tract=TTH cd=closed cl=alveolar_lateral target=-1 class=sonorant clip=default
constraints = final_devoicing

[segment j]
class = sonorant
primary = tract=TH cd=narrow cl=palatal target=3 class=sonorant clip=none
constraints = final_devoicing

[segment ʁ]
aliases = R
class = sonorant
primary = tract=TH cd=critical cl=uvular target=3 class=fricative clip=none
constraints = final_devoicing

[onsets]
cluster = b ʁ
cluster = d ʁ
cluster = g ʁ
cluster = p ʁ
cluster = t ʁ
cluster = k ʁ
cluster = f ʁ
cluster = ʃ ʁ
cluster = b l
cluster = g l
cluster = p l
cluster = k l
cluster = f l
cluster = ʃ l
cluster = ʃ t
cluster = ʃ p
cluster = ʃ m
cluster = ʃ n
cluster = ʃ v
cluster = k n
cluster = g n
cluster = k v
cluster = t s
cluster = p f
illegal = ŋ
)cfg";

inline constexpr std::string_view kDefaultParameters = R"cfg(# Gesture class timing, tract variable ranges and rendering settings.
# Times in ms, phases in degrees. The class values are configuration
# defaults chosen for plausible overlap.
#
# [class NAME]  eigenperiod_ms, assoc_deg, release_deg
#               assoc_deg.<role> / release_deg.<role> override per syllable role
# [tract VAR]   code, neutral, min, max

[settings]
neutral_eigenperiod_ms = 250
ga_threshold = 1.0
pr_threshold = 2.0

[class vocalic]
eigenperiod_ms = 250
assoc_deg = 180
release_deg = 360

[class stop]
eigenperiod_ms = 120
assoc_deg = 240
release_deg = 330

[class fricative]
eigenperiod_ms = 120
assoc_deg = 220
release_deg = 330

[class sonorant]
eigenperiod_ms = 120
assoc_deg = 230
release_deg = 330

[class glottal_opening]
eigenperiod_ms = 150
assoc_deg = 180
release_deg = 360

[class velic_opening]
eigenperiod_ms = 150
assoc_deg = 180
release_deg = 360

[class glottal_closure]
eigenperiod_ms = 120
assoc_deg = 240
release_deg = 330

# Velic aperture (0 closed .. 1 open)
[tract VA]
code = 1
neutral = 0
min = 0
max = 1

# Lip protrusion (-1 spread .. 1 rounded)
[tract LP]
code = 2
neutral = 0
min = -1
max = 1

# Lip aperture, mm
[tract LA]
code = 2
neutral = 12
min = 0
max = 25

# Tongue body constriction degree, mm
[tract TH]
code = 3
neutral = 10
min = 0
max = 20

# Tongue body position (-1 front .. 1 back)
[tract TP]
code = 3
neutral = 0
min = -1
max = 1

# Tongue tip constriction degree, mm
[tract TTH]
code = 4
neutral = 8
min = 0
max = 20

# Tongue tip position (-1 dental .. 1 postalveolar)
[tract TTP]
code = 4
neutral = 0
min = -1
max = 1

# Lung pressure, cmH2O
[tract PR]
code = 8
neutral = 8
min = 0
max = 12

# Vocal fold tension (0 .. 1)
[tract CT]
code = 9
neutral = 0.5
min = 0
max = 1

# Glottal aperture, mm
[tract GA]
code = 10
neutral = 0.3
min = 0
max = 3
)cfg";

}  // namespace phonogest::defaults
