#pragma once

#include <string_view>

namespace entailkit::resources {

// Built-in English stopwords, one per line. Negation words (no, not, nor,
// never, n't, cannot) are deliberately absent.
inline constexpr std::string_view kStopwords = R"(i
me
my
myself
we
our
ours
ourselves
you
your
yours
yourself
yourselves
he
him
his
himself
she
her
hers
herself
it
its
itself
they
them
their
theirs
themselves
what
which
who
whom
this
that
these
those
am
is
are
was
were
be
been
being
have
has
had
having
do
does
did
doing
a
an
the
and
but
if
or
because
as
until
while
of
at
by
for
with
about
against
between
into
through
during
before
after
above
below
to
from
up
down
in
out
on
off
over
under
again
further
then
once
here
there
when
where
why
how
all
any
both
each
few
more
most
other
some
such
only
own
same
so
than
too
very
s
t
can
will
just
should
now
d
ll
m
o
re
ve
y
could
would
might
may
shall
must
)";

// Built-in lemma table, "surface<TAB>lemma" per line. Covers the common
// inflections of the SICK vocabulary; every lemma is its own fixpoint.
inline constexpr std::string_view kLemmaTableParts[] = {
    R"(added	add
adds	add
adults	adult
aimed	aim
aims	aim
airplanes	airplane
am	be
animals	animal
apples	apple
approached	approach
approaches	approach
are	be
arms	arm
arranged	arrange
arranges	arrange
arrived	arrive
arrives	arrive
ascended	ascend
ascends	ascend
ate	eat
attacked	attack
attacks	attack
audiences	audience
axes	axe
babies	baby
backs	back
bags	bag
baked	bake
bakes	bake
balls	ball
bananas	banana
bands	band
barked	bark
barks	bark
bars	bar
bats	bat
beaches	beach
beans	bean
bears	bear
beds	bed
been	be
began	begin
begins	begin
begun	begin
benches	bench
bends	bend
bent	bend
berries	berry
bicycles	bicycle
bikers	biker
bikes	bike
birds	bird
bites	bite
bitten	bite
blankets	blanket
blew	blow
blocked	block
blocks	block
blown	blow
blows	blow
boats	boat
bodies	body
boiled	boil
boils	boil
books	book
boots	boot
bottles	bottle
bought	buy
bounced	bounce
bounces	bounce
bowls	bowl
boxes	box
boys	boy
branches	branch
breaks	break
bricks	brick
bridges	bridge
brings	bring
broke	break
broken	break
brothers	brother
brought	bring
brushed	brush
brushes	brush
buckets	bucket
buildings	building
builds	build
built	build
bulls	bull
buses	bus
bushes	bush
businessmen	businessman
buys	buy
cacti	cactus
cakes	cake
calves	calf
came	come
camels	camel
cameramen	cameraman
cameras	camera
canoes	canoe
caps	cap
carried	carry
carries	carry
carrots	carrot
cars	car
carved	carve
carves	carve
catches	catch
cats	cat
caught	catch
caves	cave
chairs	chair
chased	chase
chases	chase
chefs	chef
cherries	cherry
chewed	chew
chews	chew
chickens	chicken
children	child
chopped	chop
chops	chop
cities	city
clapped	clap
claps	clap
classes	class
cleaned	clean
cleans	clean
cliffs	cliff
climbed	climb
climbers	climber
climbs	climb
closed	close
closes	close
coats	coat
combed	comb
combs	comb
comes	come
competed	compete
competes	compete
competitions	competition
computers	computer
cooked	cook
cookies	cookie
cooks	cook
costumes	costume
couches	couch
could	can
countries	country
couples	couple
cows	cow
crashed	crash
crashes	crash
crawled	crawl
crawls	crawl
cried	cry
cries	cry
crossed	cross
crosses	cross
crowds	crowd
cucumbers	cucumber
cuddled	cuddle
cuddles	cuddle
cups	cup
cuts	cut
cyclists	cyclist
danced	dance
dancers	dancer
dances	dance
daughters	daughter
decorated	decorate
decorates	decorate
descended	descend
descends	descend
did	do
died	die
dies	die
digs	dig
dishes	dish
dived	dive
dives	dive
doctors	doctor
does	do
dogs	dog
donkeys	donkey
doors	door
dove	dive
dragged	drag
drags	drag
drank	drink
drawn	draw
draws	draw
dressed	dress
dresses	dress
drew	draw
dribbled	dribble
dribbles	dribble
drinks	drink
driven	drive
drives	drive
dropped	drop
drops	drop
drove	drive
drummed	drum
drummers	drummer
drums	drum
drunk	drink
ducks	duck
dug	dig
dyed	dye
dyes	dye
ears	ear
eaten	eat
eats	eat
eggs	egg
elephants	elephant
emptied	empty
empties	empty
entered	enter
enters	enter
events	event
examined	examine
examines	examine
exited	exit
exits	exit
explored	explore
explores	explore
eyes	eye
faces	face
fallen	fall
falls	fall
families	family
fans	fan
fathers	father
fed	feed
feeds	feed
feet	foot
fell	fall
fences	fence
fields	field
fights	fight
filled	fill
fills	fill
finds	find
fingers	finger
fired	fire
firemen	fireman
fires	fire
fished	fish
fishermen	fisherman
fishes	fish
fixed	fix
fixes	fix
flags	flag
flew	fly
flies	fly
floated	float
floats	float
flowers	flower
flown	fly
flutes	flute
folded	fold
folds	fold
followed	follow
follows	follow
forks	fork
fought	fight
found	find
fountains	fountain
fried	fry
friends	friend
fries	fry
frisbees	frisbee
fruits	fruit
galloped	gallop
gallops	gallop
games	game
gardens	garden
gathered	gather
gathers	gather
gave	give
gazed	gaze
gazes	gaze
geese	goose
gentlemen	gentleman
gets	get
giraffes	giraffe
girls	girl
given	give
gives	give
glasses	glass
gloves	glove
goals	goal
goats	goat
goes	go
gone	go
got	get
gotten	get
grated	grate
grates	grate
grazed	graze
grazes	graze
grilled	grill
grills	grill
grinds	grind
groomed	groom
grooms	groom
groups	group
guitars	guitar
guys	guy
had	have
halves	half
hammers	hammer
)",
    R"(hands	hand
hangs	hang
has	have
hats	hat
heads	head
heard	hear
hears	hear
held	hold
helmets	helmet
herded	herd
herds	herd
hid	hide
hidden	hide
hides	hide
hiked	hike
hikes	hike
hills	hill
hits	hit
holds	hold
hopped	hop
hops	hop
horses	horse
hoses	hose
houses	house
hugged	hug
hugs	hug
hung	hang
hunted	hunt
hunts	hunt
hurdled	hurdle
hurdles	hurdle
instruments	instrument
is	be
jackets	jacket
jogged	jog
jogs	jog
jumped	jump
jumps	jump
kayaks	kayak
keeps	keep
kept	keep
keyboards	keyboard
kicked	kick
kicks	kick
kids	kid
kissed	kiss
kisses	kiss
kitchens	kitchen
kittens	kitten
kneels	kneel
knees	knee
knelt	kneel
knits	knit
knitted	knit
knives	knife
knocked	knock
knocks	knock
ladders	ladder
ladies	lady
laid	lay
lakes	lake
lanes	lane
laughed	laugh
laughs	laugh
lays	lay
leads	lead
leaned	lean
leans	lean
leant	lean
leaped	leap
leaps	leap
leashes	leash
leaves	leave
led	lead
legs	leg
lemons	lemon
letters	letter
licked	lick
licks	lick
lies	lie
lifted	lift
lifts	lift
lights	light
lines	line
lions	lion
lit	light
lives	life
loaded	load
loads	load
loaves	loaf
locked	lock
locks	lock
looked	look
looks	look
loses	lose
lost	lose
made	make
makes	make
marched	march
marches	march
masks	mask
matches	match
mats	mat
meets	meet
melted	melt
melts	melt
men	man
met	meet
mice	mouse
microphones	microphone
might	may
milked	milk
milks	milk
mixed	mix
mixes	mix
monkeys	monkey
mopped	mop
mops	mop
mothers	mother
motorcycles	motorcycle
mountains	mountain
mouths	mouth
moves	move
mushrooms	mushroom
musicians	musician
n't	not
nets	net
noodles	noodle
noses	nose
notes	note
nuts	nut
oceans	ocean
officers	officer
olives	olive
onions	onion
opened	open
opens	open
oranges	orange
oxen	ox
paddled	paddle
paddles	paddle
paid	pay
painted	paint
paints	paint
pans	pan
papers	paper
parks	park
parties	party
passed	pass
passes	pass
paths	path
pays	pay
peaches	peach
peas	pea
peeled	peel
peels	peel
peppers	pepper
performances	performance
performed	perform
performs	perform
persons	person
pets	pet
petted	pet
phones	phone
photos	photo
pianos	piano
picked	pick
picks	pick
pictures	picture
pigs	pig
pillows	pillow
pipes	pipe
pizzas	pizza
planes	plane
planted	plant
plants	plant
plates	plate
played	play
players	player
plays	play
plucked	pluck
plucks	pluck
pointed	point
points	point
poles	pole
policemen	policeman
ponds	pond
ponies	pony
pools	pool
posed	pose
poses	pose
potatoes	potato
pounded	pound
pounds	pound
poured	pour
pours	pour
practiced	practice
practices	practice
puddles	puddle
pulled	pull
pulls	pull
puppies	puppy
pushed	push
pushes	push
puts	put
rabbits	rabbit
raced	race
races	race
rackets	racket
rafts	raft
raised	raise
raises	raise
ramps	ramp
ran	run
rang	ring
reads	read
relaxed	relax
relaxes	relax
repaired	repair
repairs	repair
rested	rest
rests	rest
ridden	ride
riders	rider
rides	ride
rings	ring
rivers	river
roads	road
roasted	roast
roasts	roast
rocks	rock
rode	ride
rolled	roll
rolls	roll
rooms	room
ropes	rope
rowed	row
rows	row
rubbed	rub
rubs	rub
rung	ring
runners	runner
runs	run
saddled	saddle
saddles	saddle
said	say
sailed	sail
sails	sail
sandwiches	sandwich
sang	sing
sank	sink
sat	sit
saws	saw
saxophones	saxophone
says	say
scored	score
scores	score
scratched	scratch
scratches	scratch
screamed	scream
screams	scream
searched	search
searches	search
seeds	seed
seen	see
sees	see
sells	sell
served	serve
serves	serve
sets	set
sewed	sew
sewn	sew
sews	sew
shaken	shake
shakes	shake
shaved	shave
shaves	shave
sheared	shear
shears	shear
shelves	shelf
ships	ship
shirts	shirt
shoes	shoe
shook	shake
shoots	shoot
shores	shore
shot	shoot
should	shall
shoulders	shoulder
shouted	shout
shouts	shout
shovels	shovel
showed	show
shown	show
shows	show
sidewalks	sidewalk
signs	sign
singers	singer
sings	sing
sinks	sink
sisters	sister
sits	sit
skateboarders	skateboarder
skateboards	skateboard
skated	skate
skates	skate
)",
    R"(skated	skate
skidded	skid
skids	skid
skied	ski
skiers	skier
skipped	skip
skips	skip
skis	ski
sleeps	sleep
slept	sleep
sliced	slice
slices	slice
slid	slide
slides	slide
slipped	slip
slips	slip
slopes	slope
smiled	smile
smiles	smile
sniffed	sniff
sniffs	sniff
snuggled	snuggle
snuggles	snuggle
socks	sock
sofas	sofa
sold	sell
soldiers	soldier
songs	song
sons	son
speaks	speak
spins	spin
splashed	splash
splashes	splash
spoke	speak
spoken	speak
spoons	spoon
sportsmen	sportsman
sprayed	spray
sprays	spray
spun	spin
squeezed	squeeze
squeezes	squeeze
stages	stage
stands	stand
stared	stare
stares	stare
statues	statue
steals	steal
steps	step
sticks	stick
stirred	stir
stirs	stir
stole	steal
stolen	steal
stones	stone
stood	stand
strawberries	strawberry
streets	street
stretched	stretch
stretches	stretch
strikes	strike
strolled	stroll
strolls	stroll
struck	strike
strummed	strum
strums	strum
stuck	stick
students	student
suits	suit
sung	sing
sunk	sink
surfboards	surfboard
surfed	surf
surfers	surfer
surfs	surf
swam	swim
sweaters	sweater
sweeps	sweep
swept	sweep
swimmers	swimmer
swims	swim
swings	swing
swum	swim
swung	swing
tables	table
tackled	tackle
tackles	tackle
taken	take
takes	take
talked	talk
talks	talk
tapped	tap
taps	tap
taught	teach
teachers	teacher
teaches	teach
teams	team
teenagers	teenager
teeth	tooth
tells	tell
tended	tend
tends	tend
thinks	think
thought	think
threw	throw
thrown	throw
throws	throw
tied	tie
ties	tie
tigers	tiger
toddlers	toddler
told	tell
tomatoes	tomato
took	take
tools	tool
touched	touch
touches	touch
towed	tow
towers	tower
tows	tow
toys	toy
trails	trail
trains	train
trees	tree
tricks	trick
tried	try
tries	try
trots	trot
trotted	trot
trucks	truck
trumpets	trumpet
tugged	tug
tugs	tug
tunnels	tunnel
typed	type
types	type
uniforms	uniform
used	use
uses	use
vacuumed	vacuum
vacuums	vacuum
vegetables	vegetable
vests	vest
videos	video
violins	violin
wagged	wag
wags	wag
waited	wait
waits	wait
wakes	wake
walked	walk
walks	walk
walls	wall
wandered	wander
wanders	wander
was	be
washed	wash
washes	wash
watched	watch
watches	watch
watered	water
waters	water
waved	wave
waves	wave
wears	wear
weights	weight
went	go
were	be
wheels	wheel
whistled	whistle
whistles	whistle
windows	window
wins	win
wiped	wipe
wipes	wipe
wires	wire
wishes	wish
wives	wife
woke	wake
woken	wake
wolves	wolf
women	woman
won	win
wore	wear
workers	worker
worn	wear
would	will
wrapped	wrap
wraps	wrap
wrestled	wrestle
wrestles	wrestle
writes	write
written	write
wrote	write
yards	yard
yawned	yawn
yawns	yawn
yelled	yell
yells	yell
zebras	zebra
)",
};

}  // namespace entailkit::resources
