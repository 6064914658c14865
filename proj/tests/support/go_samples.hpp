#pragma once

// Go sources shared by several test files.

inline constexpr const char* kWideGoSample = R"go(// Package sample exercises most of the grammar.
package sample

import (
	"context"
	crand "crypto/rand"
	. "fmt"
	_ "embed"
	"github.com/golang-jwt/jwt/v5"
	yaml "gopkg.in/yaml.v3"
)

const (
	A = iota
	B
	C = 1 << iota
)

type Number interface {
	~int | ~int64 | float64
}

type Pair[K comparable, V any] struct {
	Key   K `json:"key"`
	Value V
	next  *Pair[K, V]
}

type Stringer interface {
	String() string
}

var (
	table = map[string][]int{"a": {1, 2}, "b": nil}
	ch    = make(chan<- int, 3)
)

func Sum[T Number](xs ...T) (total T) {
	for _, x := range xs {
		total += x
	}
	return
}

func (p *Pair[K, V]) String() string { return Sprint(p.Key) }

func control(ctx context.Context, in <-chan int) (n int, err error) {
	defer func() {
		if r := recover(); r != nil {
			err = Errorf("panic: %v", r)
		}
	}()
outer:
	for i := 0; i < 10; i++ {
		switch {
		case i%2 == 0:
			continue
		case i > 7:
			break outer
		default:
			n++
		}
	}
	select {
	case v, ok := <-in:
		if !ok {
			return 0, nil
		}
		n += v
	case <-ctx.Done():
		return n, ctx.Err()
	default:
	}
	var s Stringer = &Pair[string, int]{Key: "k"}
	switch v := s.(type) {
	case *Pair[string, int]:
		n += v.Value
	case nil:
		goto done
	}
	arr := [...]byte{1, 2, 3}
	sl := arr[1:2:3]
	fn := func(x int) int { return x * 2 }
	n = fn(len(sl)) &^ 1
	go func() { ch <- n }()
	_ = jwt.MapClaims{}
	_ = yaml.Marshal
	_ = crand.Reader
	_ = 'x' + '\n'
	_ = 1.5e3 + 0x1p-2 + 2i
	_ = `raw
string`
done:
	return n, nil
}
)go";
