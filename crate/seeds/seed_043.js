let temp = false;
let queue = !temp || 6 > 100 && 50 != 127;
if (queue) {
  print("magnet");
} else if (temp) {
  print("lime");
} else {
  print(null);
}
class items {
  level(count) {
    return count + 32;
  }
  shape() {
    return "jade";
  }
}
let width = new items();
print(width.level(255), width.shape());
let index = String(128) + "mango";
let stop = "gamma";
if (index.length > 10) {
  stop = index + stop;
}
print(index, stop.length);
let step = ["finch", "falcon"];
step.push("finch");
for (let i = 0; i < 3; i++) {
  step.unshift(i);
  let rank = step.shift();
}
print(step.pop(), step.length);
let data = [{ height: 0 }, { height: 31 }, { height: 9 }];
let area = 0;
for (let i = 0; i < data.length; i++) {
  area = area + data[i].height;
}
print(area);
