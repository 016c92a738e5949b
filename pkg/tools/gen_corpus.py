#!/usr/bin/env python3
"""Regenerate src/llmgames/data/corpus.txt.

Produces ~50k tokens of original fairy-tale-style prose from deterministic
templates. The vocabulary deliberately covers the preset prompt themes
(godmother gifts, beach sunsets, invented creatures, favorite places,
national foods) so next-word suggestions stay on topic during play.
"""

import random
from pathlib import Path

TARGET_TOKENS = 50_000
SEED = 20260810

HEROES = [
    ("cinderella", "she", "her", "her"),
    ("the young princess", "she", "her", "her"),
    ("the kind prince", "he", "him", "his"),
    ("the little girl", "she", "her", "her"),
    ("the shepherd boy", "he", "him", "his"),
    ("the old queen", "she", "her", "her"),
    ("the brave knight", "he", "him", "his"),
    ("the baker's daughter", "she", "her", "her"),
    ("the fisherman's son", "he", "him", "his"),
    ("the clever tailor", "he", "him", "his"),
]

CREATURES = [
    "dragon", "unicorn", "griffin", "phoenix", "mermaid", "fairy",
    "talking fox", "wise owl", "sea serpent", "baby turtle",
    "little rabbit", "gentle bear", "silver wolf", "garden gnome",
    "cloud whale", "pocket giant",
]

COLORS = ["red", "blue", "green", "golden", "silver", "purple", "pink",
          "orange", "turquoise", "lavender"]

GIFTS = [
    "magic wand", "glass slipper", "golden crown", "silver mirror",
    "velvet cloak", "pumpkin carriage", "singing harp", "flying carpet",
    "crystal ball", "pearl necklace", "wooden flute", "map of the stars",
    "bottle of moonlight", "pair of dancing shoes", "lantern of fireflies",
]

FOODS = [
    "honey cake", "apple pie", "pumpkin soup", "chocolate cake",
    "strawberry jam", "fresh bread", "rice pudding", "blueberry pancakes",
    "roasted corn", "lemon tart", "vegetable stew", "mango sorbet",
    "cinnamon rolls", "tomato soup",
]

PLACES = [
    "village by the sea", "castle on the hill", "cottage in the forest",
    "island of flowers", "city of bridges", "valley of singing birds",
    "mountain town", "lighthouse on the cliff", "garden behind the palace",
    "harbor full of sailboats", "meadow of tall grass",
]

ACTIVITIES = [
    "dance in the moonlight", "sing with the birds", "swim in the lagoon",
    "paint little pictures", "bake sweet bread", "chase the waves",
    "collect seashells", "tell long stories", "fly over the mountains",
    "sleep under the stars", "ride the evening wind",
]


def t_godmother(rng, s):
    return (
        f"Once upon a time there lived a kind girl and her name was {s['hero']}. "
        f"Her fairy godmother appeared in a swirl of {s['color']} light. "
        f"The godmother smiled and said she would give her a {s['gift']}. "
        f"Magnificent, whispered {s['hero']}, and she held the {s['gift']} close. "
        f"With the {s['gift']} in her hands she danced all the way to the {s['place']}. "
        f"The godmother watched her go and laughed softly. "
        f"It was a very good day for magic."
    )


def t_turtle(rng, s):
    return (
        f"A baby turtle hatched on the warm sand just as the sun began to set. "
        f"The little turtle looked at the {s['color']} sky and the rolling waves. "
        f"The sea smelled of salt and adventure. "
        f"Slowly the turtle crawled toward the water, one tiny step at a time. "
        f"A {s['creature']} watched from the rocks and wished the turtle good luck. "
        f"The waves lifted the turtle gently into the wide ocean. "
        f"Behind it the sunset painted the beach {s['color2']} and gold."
    )


def t_creature(rng, s):
    return (
        f"Deep in the {s['place']} lived a friendly {s['creature']}. "
        f"It had {s['color']} scales and bright {s['color2']} eyes. "
        f"More than anything the {s['creature']} liked to {s['activity']}. "
        f"Every morning it would {s['activity2']} before breakfast. "
        f"The other animals thought the {s['creature']} was strange but wonderful. "
        f"One day the {s['creature']} found a {s['gift']} hidden under a mossy stone. "
        f"From that day on it carried the {s['gift']} everywhere it went."
    )


def t_best_place(rng, s):
    return (
        f"Travelers often argue about the best place to live. "
        f"Some say it is the {s['place']}, where the bakers make {s['food']} every morning. "
        f"Others prefer the {s['place2']}, because the evenings there glow {s['color']} and calm. "
        f"A wise old {s['creature']} once said that the best place to live is wherever your friends are. "
        f"Still, the {s['place']} is hard to beat in spring. "
        f"Visitors come for the {s['food']} and stay for the sunsets."
    )


def t_national_food(rng, s):
    return (
        f"When {s['hero']} became the ruler of a small country, the first royal decree was about dinner. "
        f"The national food, the new ruler declared, would be {s['food']}. "
        f"Cooks in every town learned to make {s['food']} with great pride. "
        f"On festival days the smell of {s['food']} drifted through the streets. "
        f"Even the grumpy {s['creature']} from the {s['place']} came down to taste it. "
        f"Everyone agreed it was the finest choice a ruler ever made."
    )


def t_quest(rng, s):
    return (
        f"{s['hero']} set out one morning to find the legendary {s['gift']}. "
        f"The road wound through the {s['place']} and over three small bridges. "
        f"Along the way {s['hero']} shared some {s['food']} with a hungry {s['creature']}. "
        f"In return the {s['creature']} pointed toward a cave lit with {s['color']} light. "
        f"Inside the cave the {s['gift']} rested on a bed of soft moss. "
        f"{s['hero']} carried it home and the whole village cheered."
    )


def t_friends(rng, s):
    return (
        f"A {s['creature']} and a {s['creature2']} met on the shore near the {s['place']}. "
        f"At first they only watched each other shyly. "
        f"Then the {s['creature']} offered a piece of {s['food']} and everything changed. "
        f"They spent the whole summer learning to {s['activity']}. "
        f"When the {s['color']} leaves began to fall, they promised to meet again. "
        f"Good friends, they agreed, are the greatest magic of all."
    )


def t_mishap(rng, s):
    return (
        f"The young wizard tried to turn a pumpkin into a carriage. "
        f"Instead the spell produced a very confused {s['creature']}. "
        f"The {s['creature']} sneezed {s['color']} sparks all over the kitchen. "
        f"The wizard's teacher sighed and reached for the {s['gift']}. "
        f"With one gentle wave everything was set right again. "
        f"They celebrated with warm {s['food']} and promised to practice more carefully."
    )


def t_seasons(rng, s):
    return (
        f"In the {s['place']} winter arrived with soft white snow. "
        f"The children built little forts and shared warm {s['food']}. "
        f"The {s['creature']} slept through the cold months in a cozy den. "
        f"When spring returned the meadows turned {s['color']} with new flowers. "
        f"Farmers planted long rows of vegetables and sang old songs. "
        f"Summer brought long days perfect for anyone who liked to {s['activity']}. "
        f"By autumn every pantry was full of {s['food']}."
    )


def t_lighthouse(rng, s):
    return (
        f"Every night the lighthouse keeper told one story to the sea. "
        f"She spoke of a {s['creature']} who wished to touch the moon. "
        f"The {s['creature']} climbed the tallest tower of the {s['place']}. "
        f"The moon, kind and {s['color']}, leaned down just a little. "
        f"The {s['creature']} caught a moonbeam and wove it into a {s['gift']}. "
        f"Then it sailed home on a little boat made of starlight. "
        f"The keeper always ended the story with a quiet goodnight."
    )


TEMPLATES = [t_godmother, t_turtle, t_creature, t_best_place,
             t_national_food, t_quest, t_friends, t_mishap,
             t_seasons, t_lighthouse]


def pick(rng, pool, avoid=()):
    choice = rng.choice(pool)
    while choice in avoid:
        choice = rng.choice(pool)
    return choice


def main() -> None:
    rng = random.Random(SEED)
    paragraphs = []
    tokens = 0
    i = 0
    while tokens < TARGET_TOKENS:
        template = TEMPLATES[i % len(TEMPLATES)]
        i += 1
        hero = rng.choice(HEROES)[0]
        creature = pick(rng, CREATURES)
        color = pick(rng, COLORS)
        slots = {
            "hero": hero,
            "creature": creature,
            "creature2": pick(rng, CREATURES, avoid={creature}),
            "color": color,
            "color2": pick(rng, COLORS, avoid={color}),
            "gift": pick(rng, GIFTS),
            "food": pick(rng, FOODS),
            "place": pick(rng, PLACES),
            "place2": pick(rng, PLACES),
            "activity": pick(rng, ACTIVITIES),
            "activity2": pick(rng, ACTIVITIES),
        }
        para = template(rng, slots)
        tokens += len(para.split())
        paragraphs.append(para)

    out = Path(__file__).resolve().parent.parent / "src/llmgames/data/corpus.txt"
    out.write_text("\n\n".join(paragraphs) + "\n", encoding="utf-8")
    print(f"wrote {out} ({tokens} whitespace tokens, {len(paragraphs)} paragraphs)")


if __name__ == "__main__":
    main()
